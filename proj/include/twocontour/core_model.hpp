#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace twocontour {

enum class ParamErrorCode { NOutOfRange, LengthOutOfRange, DOutOfRange };

inline const char* to_string(ParamErrorCode code) {
  switch (code) {
    case ParamErrorCode::NOutOfRange: return "NOutOfRange";
    case ParamErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ParamErrorCode::DOutOfRange: return "DOutOfRange";
  }
  return "?";
}

class ParamError : public std::invalid_argument {
public:
  ParamError(ParamErrorCode code, const std::string& detail)
      : std::invalid_argument(std::string(to_string(code)) + ": " + detail), code_(code) {}
  ParamErrorCode code() const { return code_; }

private:
  ParamErrorCode code_;
};

// Geometry and cluster lengths. Construct through make_params; the fields are
// public for reading but a default-constructed value is not a valid system.
struct SystemParams {
  int n = 0;   // cells per contour
  int l1 = 0;  // cluster 1 length
  int l2 = 0;  // cluster 2 length
  int d = 0;   // offset of the foreign node on each contour

  bool operator==(const SystemParams&) const = default;
  auto operator<=>(const SystemParams&) const = default;

  int length(int cluster) const { return cluster == 1 ? l1 : l2; }
  // The same system with contour labels exchanged.
  SystemParams swapped() const { return {n, l2, l1, d}; }
};

inline SystemParams make_params(int n, int l1, int l2, int d) {
  if (n < 2) throw ParamError(ParamErrorCode::NOutOfRange, "n=" + std::to_string(n) + " < 2");
  for (int l : {l1, l2}) {
    if (l < 1 || l >= n) {
      throw ParamError(ParamErrorCode::LengthOutOfRange,
                       "cluster length " + std::to_string(l) + " outside [1, " + std::to_string(n - 1) + "]");
    }
  }
  if (d < 1 || d > n / 2) {
    throw ParamError(ParamErrorCode::DOutOfRange,
                     "d=" + std::to_string(d) + " outside [1, " + std::to_string(n / 2) + "]");
  }
  return {n, l1, l2, d};
}

// Front-cell pair (alpha1, alpha2).
struct SystemState {
  int alpha1 = 0;
  int alpha2 = 0;

  bool operator==(const SystemState&) const = default;
  auto operator<=>(const SystemState&) const = default;

  int front(int cluster) const { return cluster == 1 ? alpha1 : alpha2; }
  SystemState swapped() const { return {alpha2, alpha1}; }
  std::string str() const { return "(" + std::to_string(alpha1) + "," + std::to_string(alpha2) + ")"; }
};

// Node k lies between cells 0,1 of contour k and between cells d,d+1 of the other contour.
enum class NodeId { Node1 = 1, Node2 = 2 };

constexpr int node_index(NodeId node) { return static_cast<int>(node); }
constexpr NodeId node_of(int cluster) { return cluster == 1 ? NodeId::Node1 : NodeId::Node2; }
constexpr int other(int cluster) { return 3 - cluster; }

constexpr int wrap(int cell, int n) {
  const int r = cell % n;
  return r < 0 ? r + n : r;
}

inline bool in_range(const SystemParams& p, const SystemState& s) {
  return s.alpha1 >= 0 && s.alpha1 < p.n && s.alpha2 >= 0 && s.alpha2 < p.n;
}

// {front, front-1, ..., front-length+1} mod n, in that order.
inline std::vector<int> occupied_cells(const SystemParams& p, int front, int length) {
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) cells.push_back(wrap(front - k, p.n));
  return cells;
}

// Whether a cluster with the given front and length covers cell.
constexpr bool covers(int n, int front, int length, int cell) {
  // distance walking backwards from the front
  return wrap(front - cell, n) < length;
}

inline bool occupies_node(const SystemParams& p, const SystemState& s, int cluster, NodeId node) {
  const int front = s.front(cluster);
  const int length = p.length(cluster);
  const int near = node_index(node) == cluster ? 0 : p.d;
  return covers(p.n, front, length, near) && covers(p.n, front, length, wrap(near + 1, p.n));
}

inline bool is_acceptable(const SystemParams& p, const SystemState& s) {
  for (NodeId node : {NodeId::Node1, NodeId::Node2}) {
    if (occupies_node(p, s, 1, node) && occupies_node(p, s, 2, node)) return false;
  }
  return true;
}

// Lexicographic order over (alpha1, alpha2).
inline std::vector<SystemState> enumerate_acceptable_states(const SystemParams& p) {
  std::vector<SystemState> states;
  for (int a = 0; a < p.n; ++a) {
    for (int b = 0; b < p.n; ++b) {
      if (is_acceptable(p, {a, b})) states.push_back({a, b});
    }
  }
  return states;
}

}  // namespace twocontour
