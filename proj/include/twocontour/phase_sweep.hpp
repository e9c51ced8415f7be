#pragma once

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "twocontour/theorem_atlas.hpp"

namespace twocontour {

struct PhaseCell {
  int l1 = 0;
  int l2 = 0;
  Classification scenario;
  std::string spectrum_digest;
  std::vector<ResultId> theorem_matches;
  VerificationReport report;
};

struct PhaseGrid {
  int n = 0;
  int d = 0;
  std::vector<PhaseCell> cells;  // (l1, l2) with l1 <= l2, row-major

  static std::size_t index(int n, int l1, int l2) {
    // rows l1 = 1..l1-1 hold (n-1) + (n-2) + ... cells
    const int before = (l1 - 1) * (n - 1) - (l1 - 1) * (l1 - 2) / 2;
    return static_cast<std::size_t>(before + (l2 - l1));
  }
  const PhaseCell& at(int l1, int l2) const {
    if (l1 < 1 || l1 > l2 || l2 >= n) throw std::out_of_range("cell outside the l1 <= l2 triangle");
    return cells.at(index(n, l1, l2));
  }
};

inline PhaseCell evaluate_cell(const SystemParams& p) {
  PhaseCell cell;
  cell.l1 = p.l1;
  cell.l2 = p.l2;
  cell.report = verify(p);
  cell.scenario = cell.report.scenario;
  cell.spectrum_digest = digest(cell.report.spectrum.outcomes());
  for (const auto& e : cell.report.entries) {
    if (!is_lemma(e.prediction.id) && e.verdict == Verdict::Match) cell.theorem_matches.push_back(e.prediction.id);
  }
  return cell;
}

// threads == 0 picks the hardware concurrency. Each worker writes only the
// slot of the cell it claimed, so the result does not depend on scheduling.
inline PhaseGrid sweep_grid(int n, int d, unsigned threads = 0) {
  make_params(n, 1, 1, d);  // validates n and d
  PhaseGrid grid;
  grid.n = n;
  grid.d = d;
  std::vector<SystemParams> work;
  for (int l1 = 1; l1 < n; ++l1) {
    for (int l2 = l1; l2 < n; ++l2) work.push_back(make_params(n, l1, l2, d));
  }
  grid.cells.resize(work.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(work.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < work.size();) {
      try {
        grid.cells[k] = evaluate_cell(work[k]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

enum class GridFormat { CSV, JSON };

inline GridFormat grid_format_from_string(std::string_view s) {
  if (s == "csv") return GridFormat::CSV;
  if (s == "json") return GridFormat::JSON;
  throw std::invalid_argument("unknown grid format '" + std::string(s) + "'");
}

inline void emit_grid(const PhaseGrid& grid, GridFormat format, std::ostream& out) {
  if (format == GridFormat::CSV) {
    out << "l1,l2,scenario,spectrum\n";
    for (const auto& c : grid.cells) {
      out << c.l1 << ',' << c.l2 << ',' << to_string(c.scenario.label) << ",\"" << c.spectrum_digest << "\"\n";
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["n"] = grid.n;
  doc["d"] = grid.d;
  doc["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : grid.cells) {
    nlohmann::ordered_json jc;
    jc["l1"] = c.l1;
    jc["l2"] = c.l2;
    jc["scenario"] = to_string(c.scenario.label);
    jc["denominator"] = to_string(c.scenario.denominator);
    jc["spectrum"] = c.spectrum_digest;
    jc["theorem_matches"] = nlohmann::ordered_json::array();
    for (auto id : c.theorem_matches) jc["theorem_matches"].push_back(to_string(id));
    doc["cells"].push_back(std::move(jc));
  }
  out << doc.dump(2) << '\n';
}

inline std::string emit_grid(const PhaseGrid& grid, GridFormat format) {
  std::ostringstream os;
  emit_grid(grid, format, os);
  return os.str();
}

}  // namespace twocontour
