#include "alfvac/figure.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "alfvac/classical.hpp"
#include "alfvac/ladder.hpp"

namespace alfvac::figure {

std::optional<Panel> parse_panel(std::string_view name) {
  if (name == "oscillator") return Panel{Panel::Kind::oscillator, 0};
  constexpr std::string_view prefix = "mode-";
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto digits = name.substr(prefix.size());
  int ell = -1;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), ell);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  if (ell < 0 || ell > kMaxModePanel) return std::nullopt;
  return Panel{Panel::Kind::mode, ell};
}

Table sample_panel(const Panel& panel, int samples) {
  if (samples < 2) throw std::invalid_argument("a figure panel needs at least 2 samples");
  Table table;
  const bool osc = panel.kind == Panel::Kind::oscillator;
  const double lo = osc ? -kOscillatorHalfWidth : -1.0;
  const double hi = -lo;
  std::vector<double> abscissa(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) abscissa[k] = lo + (hi - lo) * k / (samples - 1);
  abscissa.back() = hi;
  table.header.push_back(osc ? "u" : "x");
  table.columns.push_back(abscissa);
  if (osc) {
    for (int n = 0; n < kOscillatorCurves; ++n) {
      table.header.push_back("psi_" + std::to_string(n));
      std::vector<double> col;
      col.reserve(abscissa.size());
      for (double u : abscissa) col.push_back(classical::oscillator_wavefunction(n, u));
      table.columns.push_back(std::move(col));
    }
    return table;
  }
  const int ell = panel.ell;
  for (int m = ell; m >= 0; --m) {
    table.header.push_back("F_" + std::to_string(ell) + "^" + std::to_string(m));
    ModifiedALF f = modified(ell, m);
    std::vector<double> col;
    col.reserve(abscissa.size());
    for (double x : abscissa) col.push_back(f(x));
    table.columns.push_back(std::move(col));
  }
  return table;
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value == 0.0 ? 0.0 : value);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out += ',';
    out += table.header[c];
  }
  out += '\n';
  const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      out += format_real(table.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(std::string_view text) {
  Table table;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  std::istringstream head(line);
  for (std::string cell; std::getline(head, cell, ',');) table.header.push_back(cell);
  table.columns.resize(table.header.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::size_t c = 0;
    for (std::string cell; std::getline(row, cell, ','); ++c) {
      if (c >= table.columns.size()) throw std::invalid_argument("CSV row wider than header");
      table.columns[c].push_back(std::stod(cell));
    }
    if (c != table.columns.size()) throw std::invalid_argument("CSV row narrower than header");
  }
  return table;
}

int sign_changes(std::span<const double> values) {
  int changes = 0, last = 0;
  for (double v : values) {
    int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace alfvac::figure
