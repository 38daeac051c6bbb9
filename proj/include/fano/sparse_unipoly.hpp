#ifndef FANO_SPARSE_UNIPOLY_HPP
#define FANO_SPARSE_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

namespace fano {

/// Sparse univariate polynomial: terms ascending by exponent, no zero
/// coefficients stored. Exp is any ordered additive exponent type
/// (uint64, unsigned __int128 or BigInt).
template <class Exp, class V>
struct SparseUniPoly {
  struct Term {
    Exp exponent;
    V coefficient;
  };

  std::vector<Term> terms;

  static SparseUniPoly unit(V one) {
    SparseUniPoly p;
    p.terms.push_back(Term{Exp(0), std::move(one)});
    return p;
  }

  std::size_t term_count() const { return terms.size(); }

  const V* coefficient_at(const Exp& e) const {
    auto it = std::lower_bound(
        terms.begin(), terms.end(), e,
        [](const Term& t, const Exp& x) { return t.exponent < x; });
    if (it == terms.end() || e < it->exponent) return nullptr;
    return &it->coefficient;
  }
};

/// One substituted linear factor: a handful of (exponent, small coefficient)
/// monomials, ascending by exponent.
template <class Exp>
struct SubstitutedForm {
  std::vector<std::pair<Exp, long>> monomials;
};

/// product * form, discarding every exponent above limit. Valid because
/// exponents only grow across later multiplications. k-way ascending merge of
/// the shifted copies of `in`, so the output is canonical.
template <class Ring, class Exp>
SparseUniPoly<Exp, typename Ring::value_type> multiply_form_pruned(
    const SparseUniPoly<Exp, typename Ring::value_type>& in,
    const SubstitutedForm<Exp>& form, const Exp& limit, const Ring& ring) {
  using Poly = SparseUniPoly<Exp, typename Ring::value_type>;
  const std::size_t k = form.monomials.size();
  Poly out;
  if (in.terms.empty() || k == 0) return out;
  out.terms.reserve(in.terms.size() + in.terms.size() / 2 + k);

  std::vector<std::size_t> pos(k, 0);
  std::vector<Exp> cand(k);
  std::vector<char> alive(k, 0);
  auto refresh = [&](std::size_t j) {
    if (pos[j] < in.terms.size()) {
      Exp c = in.terms[pos[j]].exponent + form.monomials[j].first;
      if (limit < c) {
        alive[j] = 0;  // exponents ascend, the whole stream is past the limit
      } else {
        cand[j] = std::move(c);
        alive[j] = 1;
      }
    } else {
      alive[j] = 0;
    }
  };
  for (std::size_t j = 0; j < k; ++j) refresh(j);

  bool have_current = false;
  Exp current_exp{};
  typename Ring::value_type acc = ring.zero();
  for (;;) {
    std::size_t best = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (alive[j] && (best == k || cand[j] < cand[best])) best = j;
    }
    if (best == k) break;
    if (!have_current) {
      current_exp = cand[best];
      have_current = true;
    } else if (current_exp < cand[best]) {
      if (!ring.is_zero(acc)) {
        out.terms.push_back({std::move(current_exp), std::move(acc)});
      }
      acc = ring.zero();
      current_exp = cand[best];
    }
    ring.add_scaled(acc, in.terms[pos[best]].coefficient, form.monomials[best].second);
    ++pos[best];
    refresh(best);
  }
  if (have_current && !ring.is_zero(acc)) {
    out.terms.push_back({std::move(current_exp), std::move(acc)});
  }
  return out;
}

/// a * b with pruning above limit. Streams the smaller operand's terms over
/// the larger one through a min-heap keyed on (exponent, stream index), so the
/// result is canonical and independent of operand sizes.
template <class Ring, class Exp>
SparseUniPoly<Exp, typename Ring::value_type> multiply_sparse_pruned(
    const SparseUniPoly<Exp, typename Ring::value_type>& a,
    const SparseUniPoly<Exp, typename Ring::value_type>& b, const Exp& limit,
    const Ring& ring) {
  using Poly = SparseUniPoly<Exp, typename Ring::value_type>;
  const Poly& small = a.terms.size() <= b.terms.size() ? a : b;
  const Poly& large = a.terms.size() <= b.terms.size() ? b : a;
  Poly out;
  if (small.terms.empty() || large.terms.empty()) return out;

  struct HeapItem {
    Exp exponent;
    std::uint32_t stream;
    std::size_t pos;
  };
  auto greater = [](const HeapItem& x, const HeapItem& y) {
    if (y.exponent < x.exponent) return true;
    if (x.exponent < y.exponent) return false;
    return x.stream > y.stream;
  };
  std::priority_queue<HeapItem, std::vector<HeapItem>, decltype(greater)> heap(greater);

  for (std::uint32_t s = 0; s < small.terms.size(); ++s) {
    Exp cand = small.terms[s].exponent + large.terms[0].exponent;
    if (!(limit < cand)) heap.push({cand, s, 0});
  }

  bool have_current = false;
  Exp current_exp{};
  typename Ring::value_type acc = ring.zero();
  while (!heap.empty()) {
    HeapItem item = heap.top();
    heap.pop();
    if (!have_current) {
      current_exp = item.exponent;
      have_current = true;
    } else if (current_exp < item.exponent) {
      if (!ring.is_zero(acc)) out.terms.push_back({current_exp, std::move(acc)});
      acc = ring.zero();
      current_exp = item.exponent;
    }
    ring.mul_add(acc, small.terms[item.stream].coefficient,
                 large.terms[item.pos].coefficient);
    if (item.pos + 1 < large.terms.size()) {
      Exp cand = small.terms[item.stream].exponent + large.terms[item.pos + 1].exponent;
      if (!(limit < cand)) heap.push({cand, item.stream, item.pos + 1});
    }
  }
  if (have_current && !ring.is_zero(acc)) {
    out.terms.push_back({current_exp, std::move(acc)});
  }
  return out;
}

}  // namespace fano

#endif
