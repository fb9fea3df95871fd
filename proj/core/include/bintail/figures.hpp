#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bintail/enclosure.hpp"

namespace bintail {

enum class FigureId { fig1, fig2, fig3 };

std::string_view to_string(FigureId id);
std::optional<FigureId> parse_figure_id(std::string_view text);

struct FigureSpec {
  FigureId figure = FigureId::fig1;
  /// Trials for fig1/fig3; unused by fig2.
  long n = 10;
  /// fig1/fig3: p = i/samples. fig2: x = 1 + 10 i/samples.
  long sample_count = 1000;
  int precision_bits = kDefaultPrecisionBits;
};

/// Rows of decimal strings; an empty cell means the curve is undefined or
/// its hypothesis fails at that grid point.
struct FigureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Throws RangeError for sample_count < 2 or n < 1.
FigureTable figure_table(const FigureSpec& spec, unsigned jobs = 1);

std::string to_csv(const FigureTable& table);
std::string to_json(const FigureTable& table, const FigureSpec& spec);

}  // namespace bintail
