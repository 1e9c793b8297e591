#pragma once
// The d-regular tree (3 <= d <= 10) as the Cayley graph of the free product
// of d copies of Z/2.
//
// A vertex is a reduced word over the letters '0'..'0'+d-1 (no two equal
// letters adjacent); the empty word is the root, printed as "e". Each letter
// is an involution, so the d neighbors of w are "append letter L" when w does
// not end in L and "drop the last letter" when it does — exactly one of the
// two per letter. Transport is left multiplication followed by reduction,
// which is a graph automorphism taking the root to v.

#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab {

class tree_graph {
public:
  using vertex_id = std::string;
  using id_hash = std::hash<std::string>;
  using id_eq = std::equal_to<std::string>;

  explicit tree_graph(int degree) : degree_(degree) {
    if (degree < 3)
      throw usage_error("tree degree must be >= 3 (degree 2 is the line; use lattice(d=1))");
    if (degree > 10)
      throw limit_error("tree degree must be <= 10 (got " + std::to_string(degree) + ")");
  }

  int degree() const { return degree_; }

  vertex_id origin() const { return {}; }

  std::vector<vertex_id> neighbors(const vertex_id& v) const {
    std::vector<vertex_id> out;
    out.reserve(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) {
      const char letter = static_cast<char>('0' + i);
      if (!v.empty() && v.back() == letter) {
        out.emplace_back(v.substr(0, v.size() - 1));
      } else {
        vertex_id w = v;
        w.push_back(letter);
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  /// Left multiplication v * w with cancellation at the seam. Both inputs are
  /// reduced, so one backward scan suffices.
  vertex_id transport(const vertex_id& v, const vertex_id& w) const {
    vertex_id r = v;
    for (char ch : w) {
      if (!r.empty() && r.back() == ch)
        r.pop_back();
      else
        r.push_back(ch);
    }
    return r;
  }

  /// Word metric: |v^-1 w|; letters are involutions so v^-1 is v reversed.
  std::int64_t distance(const vertex_id& a, const vertex_id& b) const {
    // Strip the common prefix; the rest cannot cancel further.
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<std::int64_t>((a.size() - i) + (b.size() - i));
  }

  /// Canonical order: by word length, then lexicographic.
  int compare(const vertex_id& a, const vertex_id& b) const {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
  }

  std::string print_id(const vertex_id& v) const { return v.empty() ? "e" : v; }

  vertex_id parse_id(const std::string& s) const {
    if (s == "e") return {};
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] >= '0' + degree_)
        throw usage_error("tree vertex id '" + s + "' uses a letter outside 0.." +
                          std::to_string(degree_ - 1));
      if (i > 0 && s[i] == s[i - 1])
        throw usage_error("tree vertex id '" + s + "' is not a reduced word");
    }
    return s;
  }

  std::string descriptor() const { return "tree(degree=" + std::to_string(degree_) + ")"; }

private:
  int degree_;
};

static_assert(graph_backend<tree_graph>);
static_assert(metric_backend<tree_graph>);

} // namespace edenlab
