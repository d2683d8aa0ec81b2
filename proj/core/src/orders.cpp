#include "mergesplit/orders.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "mergesplit/error.hpp"

namespace mergesplit {

namespace {

constexpr std::array<std::pair<OrderKind, std::string_view>, 8> kNames{{
    {OrderKind::utilitarian, "utilitarian"},
    {OrderKind::nash, "nash"},
    {OrderKind::leximin, "leximin"},
    {OrderKind::average, "average"},
    {OrderKind::elitist, "elitist"},
    {OrderKind::egalitarian, "egalitarian"},
    {OrderKind::majority, "majority"},
    {OrderKind::pareto, "pareto"},
}};

Rational sum(const RealMultiset& a) {
  Rational s;
  for (const auto& x : a) s += x;
  return s;
}

Rational product(const RealMultiset& a) {
  Rational p{1};
  for (const auto& x : a) {
    if (x.is_zero()) return Rational{};
    p *= x;
  }
  return p;
}

void require_non_empty(const RealMultiset& a, OrderKind kind) {
  if (a.empty()) {
    throw Error(Errc::invalid_argument,
                std::string(to_string(kind)) + " order is undefined on an empty multiset");
  }
}

RealMultiset sorted_decreasing(RealMultiset a) {
  std::sort(a.begin(), a.end(), std::greater<>{});
  return a;
}

}  // namespace

Basis basis_of(OrderKind kind) noexcept {
  return kind == OrderKind::majority || kind == OrderKind::pareto ? Basis::vector : Basis::multiset;
}

bool is_engine_admissible(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::utilitarian:
    case OrderKind::nash:
    case OrderKind::leximin:
    case OrderKind::pareto:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(OrderKind kind) noexcept {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<OrderKind> parse_order_kind(std::string_view name) noexcept {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

PayoffVector::PayoffVector(std::vector<Rational> values) {
  entries_.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries_.emplace_back(static_cast<PlayerId>(i + 1), std::move(values[i]));
  }
}

PayoffVector::PayoffVector(std::vector<std::pair<PlayerId, Rational>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i - 1].first) {
      throw Error(Errc::invalid_argument,
                  "payoff vector repeats player " + std::to_string(entries_[i].first));
    }
  }
}

PlayerSet PayoffVector::support() const {
  std::vector<PlayerId> ids;
  ids.reserve(entries_.size());
  for (const auto& e : entries_) ids.push_back(e.first);
  return PlayerSet::of(ids);
}

bool extended_lex_greater(std::span<const Rational> s, std::span<const Rational> t) {
  const std::size_t common = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (s[i] != t[i]) return s[i] > t[i];
  }
  return s.size() > t.size();
}

bool compare_multisets(OrderKind kind, const RealMultiset& a, const RealMultiset& b) {
  switch (kind) {
    case OrderKind::utilitarian:
      return sum(a) > sum(b);
    case OrderKind::nash:
      return product(a) > product(b);
    case OrderKind::leximin: {
      const RealMultiset sa = sorted_decreasing(a);
      const RealMultiset sb = sorted_decreasing(b);
      return extended_lex_greater(sa, sb);
    }
    case OrderKind::average:
      require_non_empty(a, kind);
      require_non_empty(b, kind);
      return sum(a) / Rational(static_cast<std::int64_t>(a.size())) >
             sum(b) / Rational(static_cast<std::int64_t>(b.size()));
    case OrderKind::elitist:
      require_non_empty(a, kind);
      require_non_empty(b, kind);
      return *std::max_element(a.begin(), a.end()) > *std::max_element(b.begin(), b.end());
    case OrderKind::egalitarian:
      require_non_empty(a, kind);
      require_non_empty(b, kind);
      return *std::min_element(a.begin(), a.end()) > *std::min_element(b.begin(), b.end());
    case OrderKind::majority:
    case OrderKind::pareto:
      break;
  }
  throw Error(Errc::wrong_basis,
              std::string(to_string(kind)) + " compares payoff vectors, not multisets");
}

bool compare_vectors(OrderKind kind, const PayoffVector& x, const PayoffVector& y) {
  if (basis_of(kind) != Basis::vector) {
    throw Error(Errc::wrong_basis,
                std::string(to_string(kind)) + " compares multisets, not payoff vectors");
  }
  const auto xs = x.entries();
  const auto ys = y.entries();
  bool same_support = xs.size() == ys.size();
  for (std::size_t i = 0; same_support && i < xs.size(); ++i) {
    same_support = xs[i].first == ys[i].first;
  }
  if (!same_support) throw Error(Errc::support_mismatch, "payoff vectors over different players");

  int wins = 0;
  int losses = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].second > ys[i].second) ++wins;
    if (xs[i].second < ys[i].second) ++losses;
  }
  if (kind == OrderKind::majority) return wins > losses;
  return losses == 0 && wins > 0;
}

}  // namespace mergesplit
