#include "bk/linalg.hpp"

#include <algorithm>

namespace bk {

SparseVec SparseVec::unit(int index, const Rational& value) {
  SparseVec v;
  if (value != 0) v.entries_.emplace_back(index, value);
  return v;
}

SparseVec SparseVec::from_map(const std::map<int, Rational>& m) {
  SparseVec v;
  for (const auto& [k, x] : m)
    if (x != 0) v.entries_.emplace_back(k, x);
  return v;
}

Rational SparseVec::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const auto& e, int key) { return e.first < key; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

SparseVec& SparseVec::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= c;
  return *this;
}

SparseVec& SparseVec::axpy(const Rational& c, const SparseVec& o) {
  if (c == 0 || o.entries_.empty()) return *this;
  std::vector<std::pair<int, Rational>> out;
  out.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      out.push_back(std::move(entries_[i++]));
    } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
      out.emplace_back(o.entries_[j].first, c * o.entries_[j].second);
      ++j;
    } else {
      Rational v = entries_[i].second + c * o.entries_[j].second;
      if (v != 0) out.emplace_back(entries_[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
  return *this;
}

SparseVec SparseVec::shifted(int offset) const {
  SparseVec v(*this);
  for (auto& e : v.entries_) e.first += offset;
  return v;
}

void SparseVec::push_back(int index, Rational value) {
  if (value != 0) entries_.emplace_back(index, std::move(value));
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (a.entries_[k].first != b.entries_[k].first || a.entries_[k].second != b.entries_[k].second) return false;
  return true;
}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVec& v) const {
  // Working copy as an ordered map: eliminating a pivot only introduces
  // larger indices, so a single forward sweep clears every pivot.
  std::map<int, Rational> work;
  for (const auto& [k, x] : v.entries()) work.emplace(k, x);
  std::map<int, Rational> combo;
  for (auto it = work.begin(); it != work.end();) {
    auto row = rows_.find(it->first);
    if (row == rows_.end() || it->second == 0) {
      ++it;
      continue;
    }
    const Rational c = it->second;
    for (const auto& [k, x] : row->second.vec.entries()) {
      Rational& slot = work[k];
      slot -= c * x;
    }
    for (const auto& [g, x] : row->second.combo.entries()) combo[g] += c * x;
    it = work.upper_bound(row->first);
  }
  return Reduction{SparseVec::from_map(work), SparseVec::from_map(combo)};
}

std::optional<SparseVec> EchelonBasis::insert(const SparseVec& v, int id) {
  Reduction r = reduce(v);
  if (r.remainder.is_zero()) {
    // v = combination  =>  e_id - combination is a dependency
    SparseVec dep = SparseVec::unit(id);
    dep -= r.combination;
    return dep;
  }
  // remainder = v - combination(gens) = e_id - combination
  SparseVec combo = SparseVec::unit(id);
  combo -= r.combination;
  const Rational inv = 1 / r.remainder.entries().front().second;
  r.remainder *= inv;
  combo *= inv;
  const int pivot = r.remainder.leading_index();
  rows_.emplace(pivot, Row{std::move(r.remainder), std::move(combo)});
  return std::nullopt;
}

std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& columns) {
  EchelonBasis basis;
  std::vector<SparseVec> kernel;
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (auto dep = basis.insert(columns[j], static_cast<int>(j))) kernel.push_back(std::move(*dep));
  return kernel;
}

std::optional<SparseVec> solve_columns(const std::vector<SparseVec>& columns, const SparseVec& target) {
  EchelonBasis basis;
  for (std::size_t j = 0; j < columns.size(); ++j) basis.insert(columns[j], static_cast<int>(j));
  auto r = basis.reduce(target);
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.combination;
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
  EchelonBasis basis;
  for (std::size_t j = 0; j < vectors.size(); ++j) basis.insert(vectors[j], static_cast<int>(j));
  return basis.rank();
}

}  // namespace bk
