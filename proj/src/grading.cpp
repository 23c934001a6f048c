#include "gpi/grading.hpp"

#include "gpi/error.hpp"

namespace gpi {

PartialInjection PartialInjection::from_targets(const std::vector<int>& targets) {
  const std::size_t n = targets.size();
  if (n > 255) throw InvalidArgument("partial injections are limited to 255 points");
  PartialInjection p(n);
  std::vector<char> hit(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int t = targets[i];
    if (t == 0) continue;
    if (t < 0 || static_cast<std::size_t>(t) > n) {
      throw InvalidArgument("image " + std::to_string(t) + " out of range 1.." + std::to_string(n));
    }
    if (hit[t]) throw InvalidArgument("partial map is not injective at image " + std::to_string(t));
    hit[t] = 1;
    p.target_[i] = static_cast<std::uint8_t>(t);
  }
  return p;
}

PartialInjection PartialInjection::identity(std::size_t n) {
  PartialInjection p(n);
  for (std::size_t i = 0; i < n; ++i) p.target_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (target_[i]) out.push_back(static_cast<int>(i + 1));
  return out;
}

std::vector<int> PartialInjection::image() const {
  std::vector<char> hit(size() + 1, 0);
  for (auto t : target_)
    if (t) hit[t] = 1;
  std::vector<int> out;
  for (std::size_t j = 1; j <= size(); ++j)
    if (hit[j]) out.push_back(static_cast<int>(j));
  return out;
}

std::size_t PartialInjection::domain_size() const noexcept {
  std::size_t c = 0;
  for (auto t : target_) c += t != 0;
  return c;
}

PartialInjection PartialInjection::inverse() const {
  PartialInjection p(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (target_[i]) p.target_[target_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return p;
}

PartialInjection PartialInjection::then(const PartialInjection& next) const {
  if (next.size() != size()) throw InvalidArgument("composing partial maps of different sizes");
  PartialInjection p(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (target_[i]) p.target_[i] = next.target_[target_[i] - 1];
  return p;
}

void PartialInjection::then_into(const PartialInjection& next, PartialInjection& out) const {
  if (next.size() != size()) throw InvalidArgument("composing partial maps of different sizes");
  out.target_.resize(size());
  for (std::size_t i = 0; i < size(); ++i) out.target_[i] = target_[i] ? next.target_[target_[i] - 1] : 0;
}

std::string PartialInjection::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!target_[i]) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i + 1) + "->" + std::to_string(target_[i]);
  }
  return out + "}";
}

Grading::Grading(Group group, std::vector<Element> tuple)
    : group_(std::move(group)), tuple_(std::move(tuple)) {}

Grading Grading::build(Group group, std::vector<Element> tuple) {
  if (tuple.empty()) throw InvalidGrading("grading tuple must be nonempty");
  if (tuple.size() > 255) throw InvalidGrading("grading tuple longer than 255 entries");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!group.contains(tuple[i])) {
      throw InvalidGrading("tuple entry " + std::to_string(i + 1) + " is not a group element");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tuple[i] == tuple[j]) {
        throw InvalidGrading(
            "tuple entries " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
            " are both " + group.name(tuple[i]) +
            "; the neutral component coincides with the main diagonal only when the "
            "tuple entries are pairwise distinct");
      }
    }
  }

  Grading gr(std::move(group), std::move(tuple));
  const std::size_t n = gr.n();
  const std::size_t m = gr.group_.order();

  // position[g] = i such that g_i = g, or 0.
  std::vector<int> position(m, 0);
  for (std::size_t i = 0; i < n; ++i) position[gr.tuple_[i].id] = static_cast<int>(i + 1);

  gr.in_support_.assign(m, 0);
  gr.hat_.reserve(m);
  std::vector<int> targets(n);
  for (const Element g : gr.group_.elements()) {
    for (std::size_t i = 0; i < n; ++i) targets[i] = position[gr.group_.mul(gr.tuple_[i], g).id];
    gr.hat_.push_back(PartialInjection::from_targets(targets));
    if (!gr.hat_.back().empty()) {
      gr.in_support_[g.id] = 1;
      gr.support_.push_back(g);
    }
  }
  return gr;
}

Element Grading::degree_of_unit(int i, int j) const {
  const int n = static_cast<int>(this->n());
  if (i < 1 || i > n || j < 1 || j > n) {
    throw InvalidArgument("matrix unit (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range 1.." + std::to_string(n));
  }
  return group_.mul(group_.inv(tuple_[i - 1]), tuple_[j - 1]);
}

const PartialInjection& Grading::hat(Element g) const {
  if (!group_.contains(g)) throw InvalidArgument("element index out of range");
  return hat_[g.id];
}

PartialInjection Grading::compose_signed(std::span<const SignedElement> word) const {
  if (word.empty()) throw InvalidArgument("compose_signed needs a nonempty word");
  PartialInjection p = hat_signed(word.front());
  for (std::size_t r = 1; r < word.size() && !p.empty(); ++r) p = p.then(hat_signed(word[r]));
  return p;
}

std::string Grading::tuple_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < n(); ++i) {
    if (i) out += ",";
    out += group_.name(tuple_[i]);
  }
  return out + ")";
}

}  // namespace gpi
