#include "bintail/figures.hpp"

#include <functional>
#include <json.hpp>
#include <sstream>

#include "bintail/bounds.hpp"
#include "bintail/errors.hpp"
#include "bintail/estimates.hpp"
#include "bintail/exact_dist.hpp"
#include "bintail/parallel.hpp"

namespace bintail {
namespace {

using Row = std::vector<std::string>;

std::string exact_text(const Rational& value) { return decimal_or_significant(value); }

std::string width_text(const Enclosure& e) {
  const Rational w = e.width();
  return w == 0 ? "0" : scientific(w, 3, Rounding::up);
}

void push_enclosure(Row& row, const std::optional<Enclosure>& e) {
  if (!e) {
    row.emplace_back();
    row.emplace_back();
    return;
  }
  row.push_back(e->is_exact() ? exact_text(e->lo) : significant(e->midpoint(), 12));
  row.push_back(width_text(*e));
}

void push_exact(Row& row, const std::optional<Rational>& value) {
  row.push_back(value ? exact_text(*value) : std::string());
}

// The curve's value where it is defined and its hypothesis holds.
std::optional<Enclosure> valid_value(const std::function<BoundValue()>& bound) {
  try {
    BoundValue b = bound();
    if (!b.valid) return std::nullopt;
    return std::move(b.value);
  } catch (const RangeError&) {
    return std::nullopt;
  }
}

std::optional<Rational> exact_of(const std::optional<Enclosure>& e) {
  if (!e) return std::nullopt;
  return e->lo;
}

Row fig1_row(long n, const Rational& p, int bits) {
  Row row{exact_text(p)};
  const BinomialSpec spec(n, p);
  // The true value is shown only at the lattice points k/n.
  push_exact(row, Rational(p * n).get_den() == 1 ? std::optional(prob_exceeds_mean(spec).value()) : std::nullopt);
  push_exact(row, exact_of(valid_value([&] { return bound_greenberg_mohri(n, p); })));
  push_enclosure(row, valid_value([&] { return bound_pelekis_ramon(n, p, bits); }));
  push_enclosure(row, valid_value([&] { return bound_g_at(n, p, bits); }));
  push_exact(row, exact_of(valid_value([&] { return bound_rigollet_tong(n, p); })));
  return row;
}

Row fig3_row(long n, const Rational& p, int bits) {
  Row row{exact_text(p)};
  push_enclosure(row, valid_value([&] { return bound_plusone_at(n, p, PlusOneVariant::a, bits); }));
  push_enclosure(row, valid_value([&] { return bound_plusone_at(n, p, PlusOneVariant::b, bits); }));
  push_exact(row, exact_of(valid_value([&] { return bound_plusone_at(n, p, PlusOneVariant::c, bits); })));
  const long t = BinomialSpec(n, p).floor_mean() + 2;
  push_exact(row, exact_of(valid_value([&] { return bound_pelekis_k(n, p, t); })));
  return row;
}

Row fig2_row(const Rational& x, int bits) {
  Row row{exact_text(x)};
  push_enclosure(row, one_minus_reciprocal_pow(x, 0, bits));
  push_enclosure(row, one_minus_reciprocal_pow(x, -1, bits));
  push_enclosure(row, one_minus_reciprocal_pow(x, Rational(-1, 2), bits));
  const Enclosure sum = mono_expr(MonoKind::pair_sum, x, 0, bits);
  push_enclosure(row, Enclosure{sum.lo / 2, sum.hi / 2, sum.precision_bits});
  return row;
}

}  // namespace

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
  }
  return "fig1";
}

std::optional<FigureId> parse_figure_id(std::string_view text) {
  for (FigureId id : {FigureId::fig1, FigureId::fig2, FigureId::fig3}) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

FigureTable figure_table(const FigureSpec& spec, unsigned jobs) {
  if (spec.sample_count < 2) {
    throw RangeError("figure: sample count must be at least 2, got " + std::to_string(spec.sample_count));
  }
  if (spec.figure != FigureId::fig2 && spec.n < 1) {
    throw RangeError("figure: n must be at least 1, got " + std::to_string(spec.n));
  }
  FigureTable table;
  switch (spec.figure) {
    case FigureId::fig1:
      table.columns = {"p", "exact_gt_mean", "gm14", "pr16", "pr16_width", "doerr_g", "doerr_g_width", "rt11"};
      break;
    case FigureId::fig3:
      table.columns = {"p", "plusone_a", "plusone_a_width", "plusone_b", "plusone_b_width", "plusone_c",
                       "pelekis_k"};
      break;
    case FigureId::fig2:
      table.columns = {"x",          "pow_x",          "pow_x_width",    "pow_xm1",  "pow_xm1_width",
                       "pow_xmhalf", "pow_xmhalf_width", "pair_avg", "pair_avg_width"};
      break;
  }
  const std::size_t count = static_cast<std::size_t>(spec.sample_count) + 1;
  table.rows.resize(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const long step = static_cast<long>(i);
    Rational point(step, spec.sample_count);
    point.canonicalize();
    switch (spec.figure) {
      case FigureId::fig1: table.rows[i] = fig1_row(spec.n, point, spec.precision_bits); break;
      case FigureId::fig3: table.rows[i] = fig3_row(spec.n, point, spec.precision_bits); break;
      case FigureId::fig2: table.rows[i] = fig2_row(1 + 10 * point, spec.precision_bits); break;
    }
  });
  return table;
}

std::string to_csv(const FigureTable& table) {
  std::ostringstream out;
  const auto line = [&](const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out.str();
}

std::string to_json(const FigureTable& table, const FigureSpec& spec) {
  using Json = nlohmann::ordered_json;
  Json doc;
  doc["figure"] = std::string(to_string(spec.figure));
  if (spec.figure != FigureId::fig2) doc["n"] = spec.n;
  doc["samples"] = spec.sample_count;
  doc["precision"] = spec.precision_bits;
  doc["columns"] = table.columns;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json item = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      item[table.columns[i]] = row[i].empty() ? Json(nullptr) : Json(row[i]);
    }
    rows.push_back(std::move(item));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

}  // namespace bintail
