#include "ridgecalc/multiadditive.hpp"

#include <algorithm>

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

// ---------------------------------------------------------------- AdditiveMap

AdditiveMap::AdditiveMap(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw UsageError("AdditiveMap requires a radical basis");
}

AdditiveMap::AdditiveMap(BasisPtr basis, std::map<BasisKey, KNumber> images) : AdditiveMap(std::move(basis)) {
  for (const auto& [key, v] : images) set_image(key, v);
}

AdditiveMap AdditiveMap::scalar(const KNumber& c) {
  AdditiveMap a(c.basis());
  for (BasisKey key = 0; key < c.basis()->dimension(); ++key) {
    a.set_image(key, c * KNumber::basis_element(c.basis(), key));
  }
  return a;
}

AdditiveMap AdditiveMap::coordinate(const BasisPtr& basis, BasisKey key) {
  AdditiveMap a(basis);
  a.set_image(key, KNumber(basis, 1));
  return a;
}

KNumber AdditiveMap::image(BasisKey key) const {
  auto it = images_.find(key);
  return it == images_.end() ? KNumber(basis_) : it->second;
}

void AdditiveMap::set_image(BasisKey key, const KNumber& value) {
  if (key >= basis_->dimension()) throw UsageError("basis key out of range");
  if (!same_basis(value.basis(), basis_)) throw UsageError("AdditiveMap image on a different basis");
  if (value.is_zero()) {
    images_.erase(key);
  } else {
    images_.insert_or_assign(key, value);
  }
}

KNumber AdditiveMap::operator()(const KNumber& x) const {
  if (!same_basis(x.basis(), basis_)) throw UsageError("AdditiveMap evaluated on a different basis");
  KNumber sum(basis_);
  for (const auto& [key, q] : x.coords()) {
    auto it = images_.find(key);
    if (it != images_.end()) sum.add_scaled(it->second, q);
  }
  return sum;
}

bool AdditiveMap::is_wild() const {
  const KNumber c = image(0);
  for (BasisKey key = 1; key < basis_->dimension(); ++key) {
    if (image(key) != c * KNumber::basis_element(basis_, key)) return true;
  }
  return false;
}

bool operator==(const AdditiveMap& a, const AdditiveMap& b) {
  return same_basis(a.basis_, b.basis_) && a.images_ == b.images_;
}

// ----------------------------------------------------------- MultiAdditiveSym

std::vector<KeyTuple> sorted_key_tuples(BasisKey dim, unsigned size) {
  std::vector<KeyTuple> out;
  KeyTuple cur;
  auto rec = [&](auto&& self, BasisKey start) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (BasisKey k = start; k < dim; ++k) {
      cur.push_back(k);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

struct Expansion {
  KeyTuple keys;
  Rational weight;
};

// Multinomial expansion of x^{(s)} = (x, ..., x) into basis-key multisets:
// weight = s!/prod(c_i!) * prod coord_i^{c_i}.
std::vector<Expansion> expand_group(const KNumber& x, unsigned s) {
  std::vector<std::pair<BasisKey, Rational>> support(x.coords().begin(), x.coords().end());
  std::vector<Expansion> out;
  if (s == 0) {
    out.push_back({{}, 1});
    return out;
  }
  const Integer s_fact = factorial(s);
  KeyTuple keys;
  auto rec = [&](auto&& self, std::size_t idx, unsigned left, Rational weight, Integer denom) -> void {
    if (left == 0) {
      out.push_back({keys, weight * Rational(s_fact) / Rational(denom)});
      return;
    }
    if (idx == support.size()) return;
    const auto& [key, coord] = support[idx];
    Rational w = weight;
    for (unsigned c = 0; c <= left; ++c) {
      if (c > 0) {
        keys.push_back(key);
        w *= coord;
      }
      self(self, idx + 1, left - c, w, denom * factorial(c));
    }
    keys.resize(keys.size() - left);
  };
  rec(rec, 0, s, Rational(1), Integer(1));
  return out;
}

}  // namespace

MultiAdditiveSym::MultiAdditiveSym(BasisPtr basis, unsigned order) : basis_(std::move(basis)), order_(order) {
  if (!basis_) throw UsageError("MultiAdditiveSym requires a radical basis");
}

MultiAdditiveSym MultiAdditiveSym::monomial(const KNumber& c, unsigned order) {
  MultiAdditiveSym f(c.basis(), order);
  if (c.is_zero()) return f;
  for (const auto& keys : sorted_key_tuples(static_cast<BasisKey>(c.basis()->dimension()), order)) {
    KNumber v = c;
    for (BasisKey k : keys) v *= KNumber::basis_element(c.basis(), k);
    f.set_entry(keys, v);
  }
  return f;
}

MultiAdditiveSym MultiAdditiveSym::from_additive(const AdditiveMap& a) {
  MultiAdditiveSym f(a.basis(), 1);
  for (const auto& [key, v] : a.images()) f.set_entry({key}, v);
  return f;
}

KNumber MultiAdditiveSym::entry(KeyTuple keys) const {
  std::sort(keys.begin(), keys.end());
  auto it = entries_.find(keys);
  return it == entries_.end() ? KNumber(basis_) : it->second;
}

void MultiAdditiveSym::set_entry(KeyTuple keys, const KNumber& value) {
  if (keys.size() != order_) throw UsageError("key tuple length does not match the form's order");
  for (BasisKey k : keys) {
    if (k >= basis_->dimension()) throw UsageError("basis key out of range");
  }
  if (!same_basis(value.basis(), basis_)) throw UsageError("form value on a different basis");
  std::sort(keys.begin(), keys.end());
  if (value.is_zero()) {
    entries_.erase(keys);
  } else {
    entries_.insert_or_assign(std::move(keys), value);
  }
}

KNumber MultiAdditiveSym::eval_grouped(std::span<const std::pair<KNumber, unsigned>> groups) const {
  unsigned total = 0;
  for (const auto& [x, s] : groups) {
    if (!same_basis(x.basis(), basis_)) throw UsageError("form evaluated on a different basis");
    total += s;
  }
  if (total != order_) throw UsageError("argument count does not match the form's order");
  KNumber sum(basis_);
  if (entries_.empty()) return sum;

  std::vector<std::vector<Expansion>> expansions;
  expansions.reserve(groups.size());
  for (const auto& [x, s] : groups) expansions.push_back(expand_group(x, s));

  auto rec = [&](auto&& self, std::size_t g, const KeyTuple& keys, const Rational& weight) -> void {
    if (g == expansions.size()) {
      auto it = entries_.find(keys);
      if (it != entries_.end()) sum.add_scaled(it->second, weight);
      return;
    }
    for (const auto& e : expansions[g]) {
      KeyTuple merged;
      merged.reserve(keys.size() + e.keys.size());
      std::merge(keys.begin(), keys.end(), e.keys.begin(), e.keys.end(), std::back_inserter(merged));
      self(self, g + 1, merged, weight * e.weight);
    }
  };
  rec(rec, 0, KeyTuple{}, Rational(1));
  return sum;
}

KNumber MultiAdditiveSym::operator()(std::span<const KNumber> args) const {
  std::vector<std::pair<KNumber, unsigned>> groups;
  groups.reserve(args.size());
  for (const auto& a : args) groups.emplace_back(a, 1);
  return eval_grouped(groups);
}

KNumber MultiAdditiveSym::diagonal(const KNumber& x) const {
  const std::pair<KNumber, unsigned> g{x, order_};
  return eval_grouped(std::span(&g, 1));
}

MultiAdditiveSym MultiAdditiveSym::fix_slots(const KNumber& h, unsigned slots) const {
  if (slots > order_) throw UsageError("cannot fix more slots than the form has");
  MultiAdditiveSym out(basis_, order_ - slots);
  if (entries_.empty()) return out;
  for (const auto& keys : sorted_key_tuples(static_cast<BasisKey>(basis_->dimension()), order_ - slots)) {
    std::vector<std::pair<KNumber, unsigned>> groups;
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      groups.emplace_back(KNumber::basis_element(basis_, keys[i]), static_cast<unsigned>(j - i));
      i = j;
    }
    groups.emplace_back(h, slots);
    out.set_entry(keys, eval_grouped(groups));
  }
  return out;
}

MultiAdditiveSym MultiAdditiveSym::times_x() const {
  MultiAdditiveSym out(basis_, order_ + 1);
  if (entries_.empty()) return out;
  const Rational norm(1, order_ + 1);
  for (const auto& keys : sorted_key_tuples(static_cast<BasisKey>(basis_->dimension()), order_ + 1)) {
    KNumber v(basis_);
    for (std::size_t j = 0; j < keys.size(); ++j) {
      KeyTuple rest;
      rest.reserve(order_);
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i != j) rest.push_back(keys[i]);
      }
      auto it = entries_.find(rest);
      if (it != entries_.end()) v += it->second * KNumber::basis_element(basis_, keys[j]);
    }
    out.set_entry(keys, v * norm);
  }
  return out;
}

void MultiAdditiveSym::require_compatible(const MultiAdditiveSym& rhs) const {
  if (order_ != rhs.order_) throw UsageError("forms of different orders");
  if (!same_basis(basis_, rhs.basis_)) throw UsageError("forms on different bases");
}

MultiAdditiveSym& MultiAdditiveSym::operator+=(const MultiAdditiveSym& rhs) {
  require_compatible(rhs);
  for (const auto& [keys, v] : rhs.entries_) {
    auto it = entries_.find(keys);
    if (it == entries_.end()) {
      entries_.emplace(keys, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  return *this;
}

MultiAdditiveSym MultiAdditiveSym::scaled(const KNumber& s) const {
  MultiAdditiveSym out(basis_, order_);
  for (const auto& [keys, v] : entries_) out.set_entry(keys, v * s);
  return out;
}

bool operator==(const MultiAdditiveSym& a, const MultiAdditiveSym& b) {
  return a.order_ == b.order_ && same_basis(a.basis_, b.basis_) && a.entries_ == b.entries_;
}

}  // namespace ridgecalc
