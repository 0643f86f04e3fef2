#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "braceforge/action.hpp"
#include "braceforge/brace.hpp"
#include "braceforge/budget.hpp"

namespace braceforge::detail {

/// Backtracking over the non-degenerate cells of a normalised cochain with
/// per-cell candidate lists and constraints bucketed by their last cell.
class CochainSearch {
 public:
  using Check = std::function<bool(const Cochain&, int a, int b, int c)>;

  CochainSearch(const SkewBrace& h, std::vector<std::vector<int>> cell_options,
                std::vector<std::vector<std::array<int, 3>>> constraints_at, Check check)
      : h_(h),
        options_(std::move(cell_options)),
        at_(std::move(constraints_at)),
        check_(std::move(check)) {}

  std::vector<Cochain> run(const Budget& budget, const std::string& what) {
    const int nh = h_.order();
    cur_.assign(nh, std::vector<int>(nh, 0));
    std::uint64_t space = 1;
    for (const auto& o : options_) {
      if (o.empty()) return {};
      space = space > UINT64_MAX / o.size() ? UINT64_MAX : space * o.size();
    }
    budget.check(space, what);
    rec(0);
    return std::move(out_);
  }

 private:
  void rec(std::size_t cell) {
    const int nh = h_.order();
    if (cell == options_.size()) {
      out_.push_back(cur_);
      return;
    }
    const int a = static_cast<int>(cell) / (nh - 1) + 1;
    const int b = static_cast<int>(cell) % (nh - 1) + 1;
    for (int y : options_[cell]) {
      cur_[a][b] = y;
      bool ok = true;
      for (const auto& c : at_[cell])
        if (!check_(cur_, c[0], c[1], c[2])) {
          ok = false;
          break;
        }
      if (ok) rec(cell + 1);
    }
    cur_[a][b] = 0;
  }

  const SkewBrace& h_;
  std::vector<std::vector<int>> options_;
  std::vector<std::vector<std::array<int, 3>>> at_;
  Check check_;
  Cochain cur_;
  std::vector<Cochain> out_;
};

inline int cell_index(int nh, int a, int b) { return (a == 0 || b == 0) ? -1 : (a - 1) * (nh - 1) + (b - 1); }

/// Buckets triples (a,b,c) of a cocycle identity by the last non-degenerate
/// cell they read.
inline std::vector<std::vector<std::array<int, 3>>> bucket_triples(
    const SkewBrace& h, const std::function<int(int, int)>& op) {
  const int nh = h.order();
  const std::size_t cells = static_cast<std::size_t>(nh - 1) * (nh - 1);
  std::vector<std::vector<std::array<int, 3>>> at(std::max<std::size_t>(cells, 1));
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b)
      for (int c = 0; c < nh; ++c) {
        const int idx = std::max({cell_index(nh, a, op(b, c)), cell_index(nh, b, c),
                                  cell_index(nh, op(a, b), c), cell_index(nh, a, b)});
        if (idx >= 0) at[idx].push_back({a, b, c});
      }
  return at;
}


}  // namespace braceforge::detail
