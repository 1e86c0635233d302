#include "liekam/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liekam {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Adds the root with the given doubled coordinates if it exists.
void push_if_root(const RootSystem& rs, std::vector<int>& out, const Coords2& c) {
  int i = rs.index_of(c);
  if (i >= 0) out.push_back(i);
}

Coords2 lin(int ambient, std::initializer_list<std::pair<int, int>> terms) {
  Coords2 c(ambient, 0);
  for (auto [idx, val] : terms) c[idx - 1] += val;  // 1-based coordinates, doubled values
  return c;
}

bool is_half_root(const Root& r) {
  for (int v : r.c2)
    if (v % 2 != 0) return true;
  return false;
}

}  // namespace

std::vector<Element> UVFamily::u_elements(int slot) const {
  std::vector<Element> out;
  for (int i : u_sets[slot]) out.push_back(alg->root_vector(i));
  return out;
}

std::vector<Element> UVFamily::v_elements(int slot) const {
  std::vector<Element> out;
  for (int i : v_sets[slot]) out.push_back(alg->root_vector(i));
  return out;
}

UVFamily uv_sets(const AlgebraPtr& alg) {
  const RootSystem& rs = alg->rs();
  const LieType t = rs.lie_type();
  if (t == LieType::G)
    throw std::invalid_argument("uv_sets: the family construction does not cover type G2");

  const int amb = rs.ambient_dim();
  if (amb < 2) throw std::invalid_argument("uv_sets: coordinate L2 missing (rank too small)");

  UVFamily fam;
  fam.alg = alg;
  fam.type_tag = rs.name();

  const bool cseries = (t == LieType::C);
  const int jlo = cseries ? 2 : 3;

  if (cseries) {
    for (int j = jlo; j <= amb; ++j) {
      push_if_root(rs, fam.u_sets[0], lin(amb, {{1, 2}, {j, -2}}));   // L1 - Lj
      push_if_root(rs, fam.v_sets[0], lin(amb, {{1, -2}, {j, 2}}));   // -L1 + Lj
      push_if_root(rs, fam.u_sets[1], lin(amb, {{1, 2}, {j, 2}}));    // L1 + Lj
      push_if_root(rs, fam.v_sets[1], lin(amb, {{1, -2}, {j, -2}}));  // -L1 - Lj
    }
    push_if_root(rs, fam.u_sets[2], lin(amb, {{1, 4}}));   // 2L1
    push_if_root(rs, fam.v_sets[2], lin(amb, {{1, -4}}));  // -2L1
  } else {
    for (int j = jlo; j <= amb; ++j) {
      push_if_root(rs, fam.u_sets[0], lin(amb, {{1, 2}, {j, -2}}));   // L1 - Lj
      push_if_root(rs, fam.v_sets[0], lin(amb, {{1, -2}, {j, 2}}));   // Lj - L1
      push_if_root(rs, fam.u_sets[1], lin(amb, {{2, -2}, {j, 2}}));   // Lj - L2
      push_if_root(rs, fam.v_sets[1], lin(amb, {{2, 2}, {j, -2}}));   // L2 - Lj
      push_if_root(rs, fam.u_sets[3], lin(amb, {{1, 2}, {j, 2}}));    // L1 + Lj
      push_if_root(rs, fam.v_sets[3], lin(amb, {{1, -2}, {j, -2}}));  // -Lj - L1
      push_if_root(rs, fam.u_sets[4], lin(amb, {{2, -2}, {j, -2}}));  // -L2 - Lj
      push_if_root(rs, fam.v_sets[4], lin(amb, {{2, 2}, {j, 2}}));    // Lj + L2
    }
    push_if_root(rs, fam.u_sets[2], lin(amb, {{1, 2}, {2, -2}}));  // L1 - L2
    push_if_root(rs, fam.v_sets[2], lin(amb, {{1, -2}, {2, 2}}));  // L2 - L1

    if (t == LieType::E) {
      // half-sum families: L1, L2 coefficients fixed, slot by the sign of L8
      for (std::size_t i = 0; i < rs.size(); ++i) {
        const Root& r = rs.root(int(i));
        if (!is_half_root(r)) continue;
        if (r.c2[0] == 1 && r.c2[1] == -1) {
          (r.c2[7] == 1 ? fam.u_sets[5] : fam.u_sets[6]).push_back(int(i));
        } else if (r.c2[0] == -1 && r.c2[1] == 1) {
          (r.c2[7] == 1 ? fam.v_sets[5] : fam.v_sets[6]).push_back(int(i));
        }
      }
    } else {
      push_if_root(rs, fam.u_sets[5], lin(amb, {{1, 2}}));   // L1 (B and F only)
      push_if_root(rs, fam.v_sets[5], lin(amb, {{1, -2}}));  // -L1
      push_if_root(rs, fam.u_sets[6], lin(amb, {{2, -2}}));  // -L2
      push_if_root(rs, fam.v_sets[6], lin(amb, {{2, 2}}));   // L2
    }

    if (t == LieType::F) {
      for (int s3 : {1, -1}) {
        push_if_root(rs, fam.u_sets[7], Coords2{1, -1, s3, 1});
        push_if_root(rs, fam.u_sets[8], Coords2{1, -1, s3, -1});
        push_if_root(rs, fam.v_sets[7], Coords2{-1, 1, s3, 1});
        push_if_root(rs, fam.v_sets[8], Coords2{-1, 1, s3, -1});
      }
    }
  }

  for (auto& s : fam.u_sets) s = sorted_unique(std::move(s));
  for (auto& s : fam.v_sets) s = sorted_unique(std::move(s));
  return fam;
}

bool abelian_basis_defined(LieType type, int rank) {
  switch (type) {
    case LieType::A: return rank >= 4;
    case LieType::B: return rank >= 5 || rank == 3;
    case LieType::C: return rank >= 3;
    case LieType::D: return rank >= 5;
    case LieType::E: return true;
    case LieType::F: return true;
    case LieType::G: return false;
  }
  return false;
}

long claimed_basis_cardinality(LieType type, int rank) {
  switch (type) {
    case LieType::A: return static_cast<long>((rank + 1)) * (rank + 1) / 4;
    case LieType::B: return rank == 3 ? 5 : static_cast<long>(rank) * (rank - 1) / 2 + 1;
    case LieType::C: return static_cast<long>(rank) * (rank + 1) / 2;
    case LieType::D: return static_cast<long>(rank) * (rank - 1) / 2;
    case LieType::E: return rank == 6 ? 16 : rank == 7 ? 27 : 36;
    case LieType::F: return 9;
    case LieType::G: break;
  }
  throw std::invalid_argument("no cardinality formula for this type");
}

AbelianBasis abelian_basis(const AlgebraPtr& alg) {
  const RootSystem& rs = alg->rs();
  const LieType t = rs.lie_type();
  const int n = rs.rank();
  if (!abelian_basis_defined(t, n))
    throw std::invalid_argument("abelian basis not defined for " + rs.name() +
                                " (supported: A n>=4, B n>=5, C n>=3, D n>=5, E6-E8, F4, B3)");

  const int amb = rs.ambient_dim();
  std::vector<int> out;
  auto add = [&](const Coords2& c) {
    int i = rs.index_of(c);
    if (i < 0) throw std::logic_error("abelian basis entry is not a root");
    out.push_back(i);
  };

  switch (t) {
    case LieType::A: {
      for (int i = 1; i <= amb; i += 2)
        for (int j = 2; j <= amb; j += 2) add(lin(amb, {{i, 2}, {j, -2}}));
      break;
    }
    case LieType::B: {
      if (n == 3) {
        add(lin(amb, {{1, 2}}));
        add(lin(amb, {{1, 2}, {2, -2}}));
        add(lin(amb, {{1, 2}, {3, -2}}));
        add(lin(amb, {{1, 2}, {2, 2}}));
        add(lin(amb, {{1, 2}, {3, 2}}));
        break;
      }
      add(lin(amb, {{1, 2}}));
      for (int i = 1; i <= n; i += 2)
        for (int j = 2; j <= n; j += 2) add(lin(amb, {{i, 2}, {j, -2}}));
      for (int k = 2; k <= n; k += 2)
        for (int l = k + 2; l <= n; l += 2) add(lin(amb, {{k, -2}, {l, -2}}));
      for (int m = 1; m <= n; m += 2)
        for (int p = m + 2; p <= n; p += 2) add(lin(amb, {{m, 2}, {p, 2}}));
      break;
    }
    case LieType::C: {
      for (int tt = 1; tt <= n; tt += 2) add(lin(amb, {{tt, 4}}));
      for (int l = 2; l <= n; l += 2) add(lin(amb, {{l, -4}}));
      for (int i = 1; i <= n; i += 2)
        for (int j = 2; j <= n; j += 2) add(lin(amb, {{i, 2}, {j, -2}}));
      for (int k = 2; k <= n; k += 2)
        for (int l = k + 2; l <= n; l += 2) add(lin(amb, {{k, -2}, {l, -2}}));
      for (int m = 1; m <= n; m += 2)
        for (int p = m + 2; p <= n; p += 2) add(lin(amb, {{m, 2}, {p, 2}}));
      break;
    }
    case LieType::D: {
      for (int i = 1; i <= n; i += 2)
        for (int j = 2; j <= n; j += 2) add(lin(amb, {{i, 2}, {j, -2}}));
      for (int k = 2; k <= n; k += 2)
        for (int l = k + 2; l <= n; l += 2) add(lin(amb, {{k, -2}, {l, -2}}));
      for (int m = 1; m <= n; m += 2)
        for (int p = m + 2; p <= n; p += 2) add(lin(amb, {{m, 2}, {p, 2}}));
      break;
    }
    case LieType::E: {
      const int jmax = (n == 6) ? 5 : (n == 7) ? 6 : 8;
      for (int j = 2; j <= jmax; ++j) {
        add(lin(amb, {{1, 2}, {j, 2}}));
        add(lin(amb, {{1, 2}, {j, -2}}));
      }
      if (n == 7) add(lin(amb, {{8, 2}, {7, -2}}));
      // half-sum part: L1 coefficient +1/2, sign-pattern parity as listed
      for (std::size_t i = 0; i < rs.size(); ++i) {
        const Root& r = rs.root(int(i));
        if (!is_half_root(r) || r.c2[0] != 1) continue;
        int minus = 0;
        for (int j = 2; j <= jmax; ++j)
          if (r.c2[j - 1] < 0) ++minus;
        bool keep = false;
        if (n == 6)
          keep = (minus % 2 == 0);  // pattern L8-L7-L6 enforced by root membership
        else if (n == 7)
          keep = (minus % 2 == 1) && r.c2[7] == 1;
        else
          keep = (minus == 0 || minus == 2);
        if (keep) out.push_back(int(i));
      }
      break;
    }
    case LieType::F: {
      add(lin(amb, {{1, 2}}));
      add(lin(amb, {{1, 2}, {2, -2}}));
      add(lin(amb, {{1, 2}, {4, -2}}));
      add(lin(amb, {{3, 2}, {2, -2}}));
      add(lin(amb, {{3, 2}, {4, -2}}));
      add(lin(amb, {{2, -2}, {4, -2}}));
      add(lin(amb, {{1, 2}, {3, 2}}));
      add(Coords2{1, -1, 1, -1});
      add(Coords2{1, 1, 1, -1});
      break;
    }
    case LieType::G:
      break;
  }

  AbelianBasis basis;
  basis.alg = alg;
  basis.root_indices = sorted_unique(std::move(out));
  basis.claimed_cardinality = claimed_basis_cardinality(t, n);
  return basis;
}

std::vector<Element> AbelianBasis::elements() const {
  std::vector<Element> out;
  for (int i : root_indices) out.push_back(alg->root_vector(i));
  return out;
}

bool AbelianBasis::contains_root(int root_idx) const {
  return std::binary_search(root_indices.begin(), root_indices.end(), root_idx);
}

BaseSL2Data base_sl2(const AlgebraPtr& alg) {
  const RootSystem& rs = alg->rs();
  if (rs.lie_type() == LieType::G)
    throw std::invalid_argument("base_sl2: construction does not cover type G2");
  const int amb = rs.ambient_dim();
  Coords2 base = (rs.lie_type() == LieType::C) ? lin(amb, {{1, 4}})
                                               : lin(amb, {{1, 2}, {2, -2}});
  int bi = rs.index_of(base);
  if (bi < 0) throw std::invalid_argument("base_sl2: base root missing");

  BaseSL2Data d;
  d.alg = alg;
  auto tr = alg->sl2_triple_for_root(bi);
  d.X = tr.X;
  d.U = tr.U;
  d.V = tr.V;
  d.theta = d.U - d.V;
  d.g1_perp = alg->centralizer({d.U, d.V});

  if (split_context_available(rs.lie_type(), rs.rank())) {
    d.e0.push_back(alg->root_vector(lin(amb, {{3, 2}, {4, -2}})));
    d.e0.push_back(alg->root_vector(lin(amb, {{5, 2}, {6, -2}})));
  } else {
    d.e0_note = "two-element E0 requires the G=G1 context (types A/B/C/D, rank >= 6); "
                "in the product case E0 is a singleton from another factor";
  }
  return d;
}

bool split_context_available(LieType type, int rank) {
  return (type == LieType::A || type == LieType::B || type == LieType::C ||
          type == LieType::D) &&
         rank >= 6;
}

SplitUVFamily split_uv_sets(const AlgebraPtr& alg, const UVFamily& base) {
  const RootSystem& rs = alg->rs();
  if (!split_context_available(rs.lie_type(), rs.rank()))
    throw std::invalid_argument(
        "split_uv_sets requires the G=G1 context: types A/B/C/D with rank >= 6 "
        "(coordinates L3..L6)");
  const int amb = rs.ambient_dim();
  std::array<std::pair<Element, Element>, 2> pairs = {
      std::make_pair(alg->root_vector(lin(amb, {{3, 2}, {4, -2}})),
                     alg->root_vector(lin(amb, {{3, -2}, {4, 2}}))),
      std::make_pair(alg->root_vector(lin(amb, {{5, 2}, {6, -2}})),
                     alg->root_vector(lin(amb, {{5, -2}, {6, 2}})))};

  auto commutes = [&](int root_idx, int which) {
    Element v = alg->root_vector(root_idx);
    return alg->bracket(v, pairs[which].first).is_zero() &&
           alg->bracket(v, pairs[which].second).is_zero();
  };

  SplitUVFamily s;
  s.base = base;
  for (int e = 0; e < kQ0; ++e) {
    for (int i : base.u_sets[e]) {
      if (commutes(i, 0)) s.u1_sets[e].push_back(i);
      if (commutes(i, 1)) s.u2_sets[e].push_back(i);
    }
    for (int i : base.v_sets[e]) {
      if (commutes(i, 0)) s.v1_sets[e].push_back(i);
      if (commutes(i, 1)) s.v2_sets[e].push_back(i);
    }
  }
  return s;
}

std::string chain_kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::Cor9Step1: return "cor9_step1";
    case ChainKind::Cor9Step2: return "cor9_step2";
    case ChainKind::Cor10Step1: return "cor10_step1";
    case ChainKind::Cor10Step2: return "cor10_step2";
  }
  return "?";
}

ChainKind chain_kind_from_string(const std::string& s) {
  if (s == "cor9_step1") return ChainKind::Cor9Step1;
  if (s == "cor9_step2") return ChainKind::Cor9Step2;
  if (s == "cor10_step1") return ChainKind::Cor10Step1;
  if (s == "cor10_step2") return ChainKind::Cor10Step2;
  throw std::invalid_argument("unknown chain kind '" + s + "'");
}

ChainConfig chain_config(const AlgebraPtr& alg, ChainKind kind,
                         const std::vector<int>* eps_perm) {
  UVFamily fam = uv_sets(alg);
  BaseSL2Data sl2 = base_sl2(alg);

  std::vector<int> order(kQ0);
  std::iota(order.begin(), order.end(), 0);
  if (eps_perm) {
    if (eps_perm->size() != kQ0) throw std::invalid_argument("eps permutation must have 9 slots");
    order = *eps_perm;
  }

  const bool step1 = (kind == ChainKind::Cor9Step1 || kind == ChainKind::Cor10Step1);
  const bool split = (kind == ChainKind::Cor10Step1 || kind == ChainKind::Cor10Step2);

  std::optional<SplitUVFamily> sf;
  if (split) sf = split_uv_sets(alg, fam);

  // Q1: Lie(S1) generators (X, U and g1_perp) for step 1; Lie(S) adds all V-sets.
  GeneratorSet q1;
  q1.name = step1 ? "Lie(S1)" : "Lie(S)";
  q1.gens.push_back(sl2.X);
  q1.gens.push_back(sl2.U);
  for (std::size_t i = 0; i < sl2.g1_perp.basis.rows(); ++i) {
    Element e = alg->zero();
    e.coeffs = sl2.g1_perp.basis.row(i);
    q1.gens.push_back(std::move(e));
  }
  if (!step1)
    for (int e = 0; e < kQ0; ++e)
      for (int i : fam.v_sets[e]) q1.gens.push_back(alg->root_vector(i));

  ChainConfig cfg;
  cfg.kind = kind;
  cfg.entries.push_back(std::move(q1));

  auto add_entry = [&](const std::string& name, const std::vector<int>& idxs) {
    if (idxs.empty()) return;
    GeneratorSet gs;
    gs.name = name;
    for (int i : idxs) gs.gens.push_back(alg->root_vector(i));
    cfg.entries.push_back(std::move(gs));
  };

  for (int k = 0; k < kQ0; ++k) {
    int e = order[k];
    std::string eps = std::to_string(e + 1);
    if (!split) {
      if (step1)
        add_entry("V^" + eps, fam.v_sets[e]);
      else
        add_entry("U^" + eps, fam.u_sets[e]);
    } else {
      if (step1) {
        add_entry("V1^" + eps, sf->v1_sets[e]);
        add_entry("V2^" + eps, sf->v2_sets[e]);
      } else {
        add_entry("U1^" + eps, sf->u1_sets[e]);
        add_entry("U2^" + eps, sf->u2_sets[e]);
      }
    }
  }

  if (step1) {
    // target: Lie(S) = span(S1 generators and every V-set member)
    std::vector<Element> gens = cfg.entries[0].gens;
    for (int e = 0; e < kQ0; ++e)
      for (int i : fam.v_sets[e]) gens.push_back(alg->root_vector(i));
    cfg.target = alg->span(gens);
    cfg.target_name = "Lie(S)";
  } else {
    cfg.target = alg->full_space();
    cfg.target_name = "g";
  }
  return cfg;
}

}  // namespace liekam
