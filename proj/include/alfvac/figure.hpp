#ifndef ALFVAC_FIGURE_HPP
#define ALFVAC_FIGURE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alfvac::figure {

/// Either the oscillator panel (psi_0..psi_4 on u in [-5, 5]) or the
/// degree-l mode panel (F_l^l .. F_l^0 on x in [-1, 1]).
struct Panel {
  enum class Kind { oscillator, mode } kind = Kind::oscillator;
  int ell = 0;
};

inline constexpr int kOscillatorCurves = 5;
inline constexpr int kMaxModePanel = 4;
inline constexpr double kOscillatorHalfWidth = 5.0;

/// "oscillator" or "mode-0" .. "mode-4".
std::optional<Panel> parse_panel(std::string_view name);

/// Column-major samples: column 0 is the abscissa.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};

/// Uniform grid with both endpoints; throws std::invalid_argument for samples < 2.
Table sample_panel(const Panel& panel, int samples);

/// 17 significant digits, locale independent.
std::string format_real(double value);

std::string to_csv(const Table& table);
Table parse_csv(std::string_view text);

/// Sign changes along a sequence, zeros skipped.
int sign_changes(std::span<const double> values);

}  // namespace alfvac::figure

#endif
