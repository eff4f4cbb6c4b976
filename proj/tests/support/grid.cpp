#include "grid.hpp"

#include <algorithm>

namespace grid {

using qpw::Hyperreal;
using qpw::Rational;

qpw::ConditionalPreferenceStructure Instance::build() const {
  switch (kind) {
    case Kind::Expectation: return qpw::expectation_structure(model(), scale);
    case Kind::Hyperreal: return qpw::hyperreal_structure(model(), scale);
    case Kind::Ranked: return qpw::ranked_structure(qpw::RankedModel(space, ascending), scale);
  }
  throw std::logic_error("unknown kind");
}

qpw::StateSpace space(int n) {
  std::vector<std::string> names;
  for (int s = 0; s < n; ++s) names.emplace_back(1, static_cast<char>('a' + s));
  return qpw::StateSpace(names);
}

Hyperreal hr(std::vector<Rational> coefficients, int degree) { return Hyperreal(std::move(coefficients), degree); }

std::vector<qpw::ConsequenceScale> scales() {
  return {
      qpw::ConsequenceScale({"0", "1"}, std::vector<Rational>{0, 1}),
      qpw::ConsequenceScale({"0", "h", "1"}, std::vector<Rational>{0, Rational(1, 2), 1}),
      qpw::ConsequenceScale({"0", "q", "1"}, std::vector<Rational>{0, Rational(1, 4), 1}),
      qpw::ConsequenceScale({"0", "1", "1'"}, std::vector<Rational>{0, 1, 1}),
  };
}

namespace {

std::string weights_label(const std::vector<Hyperreal>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + qpw::to_string(w[i]);
  return out + ")";
}

std::string scale_label(const qpw::ConsequenceScale& s) {
  std::string out = "{";
  for (int c = 0; c < s.size(); ++c) out += (c ? "," : "") + qpw::to_string(s.value(c));
  return out + "}";
}

std::vector<std::vector<Rational>> standard_weights(int n) {
  switch (n) {
    case 1: return {{1}};
    case 2: return {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 3), Rational(2, 3)}};
    case 3:
      return {{Rational(1, 3), Rational(1, 3), Rational(1, 3)},
              {Rational(1, 2), Rational(1, 3), Rational(1, 6)},
              {Rational(1, 4), Rational(1, 4), Rational(1, 2)}};
    default:
      return {{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)},
              {Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10)},
              {Rational(1, 8), Rational(1, 8), Rational(1, 4), Rational(1, 2)}};
  }
}

// Per-state coefficient lists (1, e, e^2, ...).
std::vector<std::vector<std::vector<Rational>>> nonstandard_weights(int n) {
  const Rational half(1, 2);
  switch (n) {
    case 2: return {{{1, -1}, {0, 1}}, {{half, -1}, {half, 1}}};
    case 3:
      return {{{1, -1, -1}, {0, 1}, {0, 0, 1}},
              {{1, -1}, {0, 1, -1}, {0, 0, 1}},
              {{half}, {half, -1}, {0, 1}}};
    case 4:
      return {{{1, -1, -1, -1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}},
              {{half, -1}, {half, -1}, {0, 1}, {0, 1}}};
    default: return {};
  }
}

std::vector<std::vector<int>> orders(int n) {
  std::vector<int> id(n);
  for (int s = 0; s < n; ++s) id[s] = s;
  std::vector<std::vector<int>> out{id};
  if (n > 1) out.emplace_back(id.rbegin(), id.rend());
  if (n > 2) {
    auto mixed = id;
    std::rotate(mixed.begin(), mixed.begin() + 1, mixed.end());
    std::swap(mixed[0], mixed[1]);
    out.push_back(mixed);
  }
  return out;
}

}  // namespace

std::vector<Instance> expectation_grid() {
  std::vector<Instance> out;
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : standard_weights(n))
      for (const auto& scale : scales()) {
        std::vector<Hyperreal> hw;
        for (const auto& x : w) hw.push_back(Hyperreal::standard(x, 0));
        out.push_back({"expectation n=" + std::to_string(n) + " P=" + weights_label(hw) + " F=" + scale_label(scale),
                       Kind::Expectation, space(n), scale, hw, {}, false});
      }
  return out;
}

std::vector<Instance> hyperreal_grid() {
  std::vector<Instance> out;
  for (int n = 2; n <= 4; ++n)
    for (const auto& w : nonstandard_weights(n))
      for (const auto& scale : scales()) {
        std::vector<Hyperreal> hw;
        bool tiny = false;
        for (const auto& c : w) {
          hw.push_back(hr(c, 2 * n));
          tiny = tiny || hw.back().is_infinitesimal();
        }
        out.push_back({"hyperreal n=" + std::to_string(n) + " P=" + weights_label(hw) + " F=" + scale_label(scale),
                       Kind::Hyperreal, space(n), scale, hw, {}, tiny});
      }
  return out;
}

std::vector<Instance> ranked_grid() {
  std::vector<Instance> out;
  for (int n = 1; n <= 4; ++n)
    for (const auto& order : orders(n))
      for (const auto& scale : scales()) {
        std::string label = "ranked n=" + std::to_string(n) + " order=";
        for (std::size_t i = 0; i < order.size(); ++i) label += (i ? "<" : "") + std::string(1, 'a' + order[i]);
        out.push_back({label + " F=" + scale_label(scale), Kind::Ranked, space(n), scale, {}, order, false});
      }
  return out;
}

std::vector<Instance> full_grid() {
  auto out = expectation_grid();
  for (auto&& v : {hyperreal_grid(), ranked_grid()}) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace grid
