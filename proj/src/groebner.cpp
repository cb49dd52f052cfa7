#include "zdsolve/groebner.hpp"

namespace zdsolve::gbdetail {

namespace {

using ExpVec = std::vector<unsigned>;

bool divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void minimalize(std::vector<ExpVec>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExpVec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i]) && gens[j] != gens[i])
        redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

unsigned total_deg(const ExpVec& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

}  // namespace

UniPolyQ hilbert_numerator(std::vector<ExpVec> gens, std::size_t nvars) {
  budget::check();
  Rationals f;
  minimalize(gens);
  if (gens.empty()) return UniPolyQ::from_int(f, 1);
  for (const ExpVec& g : gens)
    if (total_deg(g) == 0) return UniPolyQ::zero(f);  // unit ideal

  // Variable occurring in the most generators; <=1 everywhere means the
  // generators are pairwise coprime and the numerator factors.
  std::vector<unsigned> count(nvars, 0);
  for (const ExpVec& g : gens)
    for (std::size_t v = 0; v < nvars; ++v)
      if (g[v]) ++count[v];
  std::size_t pivot = 0;
  for (std::size_t v = 1; v < nvars; ++v)
    if (count[v] > count[pivot]) pivot = v;

  if (count[pivot] <= 1) {
    UniPolyQ acc = UniPolyQ::from_int(f, 1);
    for (const ExpVec& g : gens) {
      UniPolyQ factor =
          UniPolyQ::from_int(f, 1) - UniPolyQ::monomial(f, Rat(1), total_deg(g));
      acc = acc * factor;
    }
    return acc;
  }

  // K(I) = K(I + (x)) + t * K(I : x)
  std::vector<ExpVec> plus;
  for (const ExpVec& g : gens)
    if (g[pivot] == 0) plus.push_back(g);
  ExpVec xonly(nvars, 0);
  xonly[pivot] = 1;
  plus.push_back(std::move(xonly));

  std::vector<ExpVec> colon;
  colon.reserve(gens.size());
  for (ExpVec g : gens) {
    if (g[pivot] > 0) --g[pivot];
    colon.push_back(std::move(g));
  }

  UniPolyQ left = hilbert_numerator(std::move(plus), nvars);
  UniPolyQ right = hilbert_numerator(std::move(colon), nvars);
  return left + UniPolyQ::monomial(f, Rat(1), 1) * right;
}

}  // namespace zdsolve::gbdetail
