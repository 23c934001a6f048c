#include <deque>
#include <map>

#include "gpi/error.hpp"
#include "gpi/identities.hpp"

namespace gpi {
namespace {

constexpr std::size_t kMaxVisited = 500'000;

/// prefix[i] = degree of the first i letters.
std::vector<Element> prefix_degrees(const GMonomial& m, const Group& group) {
  std::vector<Element> pre(m.size() + 1, group.identity());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& v = m[i];
    pre[i + 1] = group.mul(pre[i], v.star ? group.inv(v.element) : v.element);
  }
  return pre;
}

/// Degree of letters [first, last], 1-based inclusive.
Element window_degree(const std::vector<Element>& pre, std::size_t first, std::size_t last,
                      const Group& group) {
  return group.mul(group.inv(pre[first - 1]), pre[last]);
}

GMonomial swap_factors(const GMonomial& m, std::size_t first, std::size_t mid, std::size_t last) {
  const auto& l = m.letters();
  std::vector<GVar> out(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(first - 1));
  out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(mid - 1),
             l.begin() + static_cast<std::ptrdiff_t>(last));
  out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(first - 1),
             l.begin() + static_cast<std::ptrdiff_t>(mid - 1));
  out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(last), l.end());
  return GMonomial(std::move(out));
}

GMonomial star_factor(const GMonomial& m, std::size_t first, std::size_t last) {
  const auto& l = m.letters();
  std::vector<GVar> out(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(first - 1));
  for (std::size_t i = last; i >= first; --i) out.push_back(l[i - 1].toggled());
  out.insert(out.end(), l.begin() + static_cast<std::ptrdiff_t>(last), l.end());
  return GMonomial(std::move(out));
}

std::vector<RewriteStep> moves_from(const GMonomial& m, const Group& group) {
  const auto pre = prefix_degrees(m, group);
  const Element e = group.identity();
  const std::size_t len = m.size();
  std::vector<RewriteStep> out;
  for (std::size_t first = 1; first <= len; ++first) {
    for (std::size_t last = first; last <= len; ++last) {
      if (window_degree(pre, first, last, group) == e) {
        RewriteStep s;
        s.kind = first == last ? RewriteStep::Kind::star_toggle : RewriteStep::Kind::star_factor;
        s.first = first;
        s.mid = first;
        s.last = last;
        s.result = star_factor(m, first, last);
        out.push_back(std::move(s));
      }
      for (std::size_t mid = first + 1; mid <= last; ++mid) {
        if (window_degree(pre, first, mid - 1, group) == e &&
            window_degree(pre, mid, last, group) == e) {
          out.push_back({RewriteStep::Kind::commute, first, mid, last,
                         swap_factors(m, first, mid, last)});
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<RewriteStep> rewrite_moves(const GMonomial& m, const Grading& grading) {
  return moves_from(m, grading.group());
}

std::string to_string(RewriteStep::Kind kind) {
  switch (kind) {
    case RewriteStep::Kind::commute:
      return "commute";
    case RewriteStep::Kind::star_toggle:
      return "star_toggle";
    case RewriteStep::Kind::star_factor:
      return "star_factor";
  }
  return "unknown";
}

GMonomial apply_rewrite(const GMonomial& m, const RewriteStep& step, const Grading& grading) {
  const Group& group = grading.group();
  const std::size_t len = m.size();
  if (step.first < 1 || step.last > len || step.first > step.last) {
    throw PreconditionError("rewrite range out of bounds");
  }
  const auto pre = prefix_degrees(m, group);
  const Element e = group.identity();
  switch (step.kind) {
    case RewriteStep::Kind::commute:
      if (step.mid <= step.first || step.mid > step.last ||
          window_degree(pre, step.first, step.mid - 1, group) != e ||
          window_degree(pre, step.mid, step.last, group) != e) {
        throw PreconditionError("commute needs two adjacent factors of neutral degree");
      }
      return swap_factors(m, step.first, step.mid, step.last);
    case RewriteStep::Kind::star_toggle:
    case RewriteStep::Kind::star_factor:
      if (window_degree(pre, step.first, step.last, group) != e) {
        throw PreconditionError("only factors of neutral degree may be replaced by their star");
      }
      return star_factor(m, step.first, step.last);
  }
  throw PreconditionError("unknown rewrite kind");
}

std::optional<std::vector<RewriteStep>> derivation_mod_J(const GMonomial& m1, const GMonomial& m2,
                                                         const Grading& grading,
                                                         std::optional<std::size_t> depth_cap) {
  if (!congruent_mod_J(m1, m2, grading)) {
    throw PreconditionError("derivation_mod_J needs congruent monomials");
  }
  const std::size_t cap = depth_cap.value_or(2 * m1.size() + 8);
  struct Node {
    std::size_t depth;
    const GMonomial* parent;
    RewriteStep step;
  };
  std::map<GMonomial, Node> seen;
  std::deque<const GMonomial*> queue;
  auto root = seen.emplace(m2, Node{0, nullptr, {}}).first;
  queue.push_back(&root->first);

  while (!queue.empty()) {
    const GMonomial* cur = queue.front();
    queue.pop_front();
    const Node& node = seen.at(*cur);
    if (*cur == m1) {
      std::vector<RewriteStep> path;
      for (const GMonomial* at = cur; seen.at(*at).parent; at = seen.at(*at).parent) {
        path.push_back(seen.at(*at).step);
      }
      return std::vector<RewriteStep>(path.rbegin(), path.rend());
    }
    if (node.depth >= cap) continue;
    const std::size_t depth = node.depth;
    for (auto& step : moves_from(*cur, grading.group())) {
      if (seen.contains(step.result)) continue;
      if (seen.size() >= kMaxVisited) return std::nullopt;
      GMonomial next = step.result;
      auto it = seen.emplace(std::move(next), Node{depth + 1, cur, std::move(step)}).first;
      queue.push_back(&it->first);
    }
  }
  return std::nullopt;
}

}  // namespace gpi
