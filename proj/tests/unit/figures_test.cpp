#include <gtest/gtest.h>

#include "bintail/errors.hpp"
#include "bintail/exact_dist.hpp"
#include "bintail/figures.hpp"

using namespace bintail;

namespace {

std::size_t column(const FigureTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  ADD_FAILURE() << "no column " << name;
  return 0;
}

const std::vector<std::string>& row_at(const FigureTable& t, const std::string& key) {
  for (const auto& row : t.rows) {
    if (row[0] == key) return row;
  }
  ADD_FAILURE() << "no row " << key;
  return t.rows.front();
}

}  // namespace

TEST(Figures, Fig1ExactAnchors) {
  const FigureTable ten = figure_table({FigureId::fig1, 10, 1000});
  EXPECT_EQ(row_at(ten, "0.5")[column(ten, "exact_gt_mean")], "0.376953125");
  const FigureTable hundred = figure_table({FigureId::fig1, 100, 1000});
  EXPECT_EQ(row_at(hundred, "0.5")[column(hundred, "exact_gt_mean")].substr(0, 11), "0.460205381");
  // Off the lattice the exact column is blank.
  EXPECT_EQ(row_at(ten, "0.501")[column(ten, "exact_gt_mean")], "");
  EXPECT_EQ(ten.rows.size(), 1001u);
}

TEST(Figures, Fig1BlankOutsideValidity) {
  const FigureTable t = figure_table({FigureId::fig1, 10, 100});
  EXPECT_EQ(row_at(t, "0.05")[column(t, "gm14")], "");
  EXPECT_EQ(row_at(t, "0.05")[column(t, "doerr_g")], "");
  EXPECT_EQ(row_at(t, "0.05")[column(t, "rt11")], "0.05");
  EXPECT_EQ(row_at(t, "0.6")[column(t, "rt11")], "");
  EXPECT_EQ(row_at(t, "0.2")[column(t, "gm14")], "0.25");
}

// Each bound in its validity domain sits below the exact value at the
// lattice point with the same floor(np).
TEST(Figures, Fig1BoundsBelowLatticeExact) {
  for (long n : {10L, 37L}) {
    const FigureTable t = figure_table({FigureId::fig1, n, 500});
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const Rational p(static_cast<long>(i), 500);
      const long k = BinomialSpec(n, p).floor_mean();
      if (k < 1 || k >= n) continue;  // p = 0 has exact value 0
      const Rational exact = prob_exceeds_mean(BinomialSpec(n, Rational(k, n))).value();
      for (const char* name : {"gm14", "pr16", "doerr_g", "rt11"}) {
        const std::string& cell = t.rows[i][column(t, name)];
        if (cell.empty()) continue;
        EXPECT_LE(parse_rational(cell), exact + Rational(1, 1000000000)) << name << " p=" << p;
      }
    }
  }
}

TEST(Figures, Fig2FirstRow) {
  const FigureTable t = figure_table({FigureId::fig2, 0, 1000});
  const auto& first = t.rows.front();
  EXPECT_EQ(first[0], "1");
  EXPECT_EQ(first[column(t, "pair_avg")], "0.5");
  EXPECT_EQ(first[column(t, "pow_x")], "0");
  EXPECT_EQ(t.rows[1][0], "1.01");
  EXPECT_EQ(t.rows.back()[0], "11");
}

TEST(Figures, Fig3Columns) {
  const FigureTable t = figure_table({FigureId::fig3, 10, 10});
  EXPECT_EQ(row_at(t, "0.4")[column(t, "plusone_c")], "0.037");
  EXPECT_EQ(row_at(t, "0.9")[column(t, "plusone_c")], "");
  // t = floor(np) + 2 = 7 at p = 1/2: l = 4, (1/2)^10/2 * C(10,5)/C(7,5).
  EXPECT_EQ(row_at(t, "0.5")[column(t, "pelekis_k")], "0.005859375");
}

TEST(Figures, CsvStableAcrossJobs) {
  const FigureSpec spec{FigureId::fig1, 25, 300};
  EXPECT_EQ(to_csv(figure_table(spec, 1)), to_csv(figure_table(spec, 4)));
  const std::string json = to_json(figure_table(spec, 2), spec);
  EXPECT_NE(json.find("\"figure\": \"fig1\""), std::string::npos);
}

TEST(Figures, RejectsBadSpecs) {
  EXPECT_THROW(figure_table({FigureId::fig1, 10, 1}), RangeError);
  EXPECT_THROW(figure_table({FigureId::fig3, 0, 10}), RangeError);
  EXPECT_EQ(parse_figure_id("fig2"), FigureId::fig2);
  EXPECT_FALSE(parse_figure_id("fig4").has_value());
}
