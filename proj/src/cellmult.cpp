#include "cohconf/cellmult.hpp"

#include <algorithm>
#include <bit>

namespace cohconf {

namespace {

std::vector<ClassSet> singleton_products(const CoherentConfiguration& cc) {
  const std::size_t d1 = cc.class_count();
  std::vector<ClassSet> prod(d1 * d1, 0);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) {
      ClassSet s = 0;
      for (std::size_t k = 0; k < d1; ++k)
        if (cc.intersection(i, j, k) > 0) s |= ClassSet(1) << k;
      prod[i * d1 + j] = s;
    }
  return prod;
}

ClassSet product_with_table(const std::vector<ClassSet>& prod, std::size_t d1, ClassSet X,
                            ClassSet Y) {
  ClassSet out = 0;
  for (std::size_t i = 0; i < d1; ++i) {
    if (!(X >> i & 1)) continue;
    for (std::size_t j = 0; j < d1; ++j)
      if (Y >> j & 1) out |= prod[i * d1 + j];
  }
  return out;
}

}  // namespace

ClassSet complex_product(const CoherentConfiguration& cc, ClassSet X, ClassSet Y) {
  const std::size_t d1 = cc.class_count();
  if (d1 > 32) throw Error("complex_product: too many classes for the bitset representation");
  const ClassSet valid = d1 == 32 ? ~ClassSet(0) : (ClassSet(1) << d1) - 1;
  if ((X & ~valid) || (Y & ~valid)) throw Error("complex_product: class index out of range");
  return product_with_table(singleton_products(cc), d1, X, Y);
}

std::vector<ClassSet> implication_graph(const CoherentConfiguration& cc) {
  const std::size_t d1 = cc.class_count();
  if (d1 > 32) throw Error("implication_graph: too many classes");
  const auto prod = singleton_products(cc);
  std::vector<ClassSet> arcs(d1, 0);
  for (std::size_t i = 0; i < d1; ++i)
    arcs[i] = prod[i * d1 + i] | (ClassSet(1) << cc.transpose_perm()[i]) | (ClassSet(1) << i);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < d1; ++i) {
      ClassSet forced = arcs[i];
      for (std::size_t k = 0; k < d1; ++k)
        if (arcs[i] >> k & 1) forced |= prod[i * d1 + k] | arcs[k];
      if (forced != arcs[i]) {
        arcs[i] = forced;
        changed = true;
      }
    }
  }
  return arcs;
}

std::vector<ClassSet> idempotents(const CoherentConfiguration& cc, bool force) {
  const std::size_t d1 = cc.class_count();
  if (d1 > 32) throw Error("idempotents: too many classes");
  if (d1 > 26 && !force)
    throw Error("idempotents: " + std::to_string(d1) +
                " classes exceeds the exhaustive-enumeration guard; pass force to override");
  const auto prod = singleton_products(cc);
  const auto closure = implication_graph(cc);
  const auto& tp = cc.transpose_perm();

  std::vector<ClassSet> found;
  const std::uint64_t limit = (std::uint64_t(1) << d1) - 1;
  for (std::uint64_t xw = 1; xw <= limit; xw += 2) {  // class 0 always present
    const ClassSet x = static_cast<ClassSet>(xw);
    bool ok = true;
    for (std::size_t i = 0; i < d1 && ok; ++i) {
      if (!(x >> i & 1)) continue;
      if (!(x >> tp[i] & 1)) ok = false;            // transpose closure
      else if ((closure[i] & ~x) != 0) ok = false;  // implication closure escapes
    }
    if (!ok) continue;
    if (product_with_table(prod, d1, x, x) == x) found.push_back(x);
  }
  std::sort(found.begin(), found.end(), [](ClassSet a, ClassSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return found;
}

SubgroupPoset subgroup_poset(const CoherentConfiguration& cc, const std::vector<ClassSet>& idems,
                             const PermutationAction* action, const StabilizerData* stab) {
  SubgroupPoset out;
  const auto& sizes = cc.sphere_sizes();
  long total = 0;
  for (long s : sizes) total += s;

  Integer border = 0;
  if (action && stab) {
    std::vector<Permutation> bgens = stab->stabilizer_generators;
    if (bgens.empty()) bgens.push_back(identity_perm(action->degree()));
    border = group_order(PermutationAction(action->degree(), bgens));
  }

  for (const ClassSet x : idems) {
    SubgroupDescriptor d;
    d.classes = x;
    long covered = 0;
    for (std::size_t k = 0; k < cc.class_count(); ++k)
      if (x >> k & 1) {
        covered += sizes[k];
        d.coset_sizes.push_back(sizes[k]);
      }
    d.index_in_g = Rational(total) / Rational(covered);
    if (action && stab) {
      d.order = border * covered;
      d.generators = stab->stabilizer_generators;
      for (std::size_t k = 1; k < cc.class_count(); ++k) {
        if (!(x >> k & 1)) continue;
        // One transversal representative reaching the sphere of class k.
        for (int y = 0; y < action->degree(); ++y)
          if (cc.class_of(stab->base_point, y) == k) {
            d.generators.push_back(transversal_perm(*action, *stab, y));
            break;
          }
      }
    }
    out.subgroups.push_back(std::move(d));
  }

  for (std::size_t a = 0; a < idems.size(); ++a)
    for (std::size_t b = 0; b < idems.size(); ++b) {
      if (a == b || (idems[a] & idems[b]) != idems[a] || idems[a] == idems[b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < idems.size() && cover; ++c) {
        if (c == a || c == b) continue;
        if ((idems[a] & idems[c]) == idems[a] && (idems[c] & idems[b]) == idems[c])
          cover = false;
      }
      if (cover) out.hasse.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  std::sort(out.hasse.begin(), out.hasse.end());
  return out;
}

}  // namespace cohconf
