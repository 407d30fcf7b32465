#include "modrep/ffla/echelon.hpp"

#include "modrep/error.hpp"

namespace modrep::ffla {

Vector EchelonBasis::reduce(Vector& v) const {
  if (v.size() != len_) throw InvalidArgument("EchelonBasis: length mismatch");
  const Field& K = *field_;
  Vector coeff;
  if (track_) coeff.assign(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (!c) continue;
    axpy(K, v.data(), rows_[i].data(), K.neg(c), len_);
    if (track_) axpy(K, coeff.data(), combos_[i].data(), c, combos_[i].size());
  }
  return coeff;
}

bool EchelonBasis::contains(Vector v) const {
  reduce(v);
  for (auto x : v) {
    if (x) return false;
  }
  return true;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector w = v;
  Vector coeff = reduce(w);
  std::size_t piv = len_;
  for (std::size_t i = 0; i < len_; ++i) {
    if (w[i]) {
      piv = i;
      break;
    }
  }
  if (piv == len_) return false;
  const Field& K = *field_;
  const Scalar inv = K.inv(w[piv]);
  scale(K, w.data(), inv, len_);
  if (track_) {
    // w_reduced = v - sum coeff_j * orig_j, scaled by inv
    Vector combo(rows_.size() + 1, 0);
    for (std::size_t j = 0; j < coeff.size(); ++j) combo[j] = K.neg(K.mul(coeff[j], inv));
    combo[rows_.size()] = inv;
    for (auto& c : combos_) c.push_back(0);
    combos_.push_back(std::move(combo));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  originals_.push_back(v);
  return true;
}

std::optional<Vector> EchelonBasis::express(Vector v) const {
  if (!track_) throw InvalidArgument("EchelonBasis::express requires tracking");
  Vector coeff = reduce(v);
  for (auto x : v) {
    if (x) return std::nullopt;
  }
  return coeff;
}

std::vector<Vector> independent_subset(const FieldPtr& field, std::size_t len, const std::vector<Vector>& vs) {
  EchelonBasis eb(field, len);
  for (const auto& v : vs) eb.insert(v);
  return eb.inserted();
}

}  // namespace modrep::ffla
