#include "gradedlie/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace glie {

std::string isogeny_str(Isogeny iso) {
  return iso == Isogeny::SimplyConnected ? "SC" : "AD";
}

Isogeny parse_isogeny(const std::string& s) {
  if (s == "SC" || s == "sc") return Isogeny::SimplyConnected;
  if (s == "AD" || s == "ad" || s == "Adjoint" || s == "adjoint") return Isogeny::Adjoint;
  throw std::invalid_argument("parse_isogeny: unknown isogeny tag '" + s + "'");
}

namespace {

std::vector<std::vector<int>> cartan_matrix(const std::string& type) {
  // cartan[i][j] = <alpha_j, alpha_i^vee>
  if (type == "A1") return {{2}};
  if (type == "A2") return {{2, -1}, {-1, 2}};
  if (type == "A3") return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  if (type == "C2") return {{2, -2}, {-1, 2}};  // alpha1 short, alpha2 long
  if (type == "B2") return {{2, -1}, {-2, 2}};  // C2 with the simple roots swapped
  if (type == "G2") return {{2, -3}, {-1, 2}};  // alpha1 short, alpha2 long
  throw std::invalid_argument("build_root_datum: unknown or unsupported type '" + type + "'");
}

}  // namespace

RootDatum RootDatum::build(const std::string& type, Isogeny isogeny) {
  RootDatum rd;
  rd.type_ = type;
  rd.isogeny_ = isogeny;
  rd.cartan_ = cartan_matrix(type);
  rd.rank_ = static_cast<int>(rd.cartan_.size());
  const int n = rd.rank_;

  // Reflection closure on (root, coroot) pairs.
  std::vector<std::vector<int>> roots, coroots;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0), av(n, 0);
    a[i] = 1;
    av[i] = 1;
    roots.push_back(a);
    coroots.push_back(av);
    seen.insert(a);
  }
  auto pair_with_simple_coroot = [&](const std::vector<int>& root, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += root[j] * rd.cartan_[i][j];
    return s;
  };
  auto pair_simple_root_with = [&](int i, const std::vector<int>& coroot) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += coroot[j] * rd.cartan_[j][i];
    return s;
  };
  for (size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      int c = pair_with_simple_coroot(roots[k], i);
      std::vector<int> nr = roots[k];
      nr[i] -= c;
      if (seen.insert(nr).second) {
        int cv = pair_simple_root_with(i, coroots[k]);
        std::vector<int> ncv = coroots[k];
        ncv[i] -= cv;
        roots.push_back(nr);
        coroots.push_back(ncv);
      }
    }
  }

  // Order: positive roots by (height, lex), then negatives in matching order.
  std::vector<int> pos;
  for (size_t r = 0; r < roots.size(); ++r) {
    bool positive = false;
    for (int c : roots[r]) {
      if (c > 0) {
        positive = true;
        break;
      }
      if (c < 0) break;
    }
    if (positive) pos.push_back(static_cast<int>(r));
  }
  std::sort(pos.begin(), pos.end(), [&](int a, int b) {
    int ha = std::accumulate(roots[a].begin(), roots[a].end(), 0);
    int hb = std::accumulate(roots[b].begin(), roots[b].end(), 0);
    if (ha != hb) return ha < hb;
    return roots[a] < roots[b];
  });
  const int P = static_cast<int>(pos.size());
  rd.roots_.resize(2 * P);
  rd.coroots_.resize(2 * P);
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < P; ++k) {
    rd.roots_[k] = roots[pos[k]];
    rd.coroots_[k] = coroots[pos[k]];
    std::vector<int> m(n), mv(n);
    for (int j = 0; j < n; ++j) {
      m[j] = -rd.roots_[k][j];
      mv[j] = -rd.coroots_[k][j];
    }
    rd.roots_[P + k] = m;
    rd.coroots_[P + k] = mv;
  }
  for (int r = 0; r < 2 * P; ++r) index[rd.roots_[r]] = r;
  rd.neg_.resize(2 * P);
  for (int r = 0; r < 2 * P; ++r) rd.neg_[r] = (r < P) ? r + P : r - P;

  rd.pairing_.assign(2 * P, std::vector<int>(n, 0));
  for (int r = 0; r < 2 * P; ++r)
    for (int i = 0; i < n; ++i) rd.pairing_[r][i] = pair_with_simple_coroot(rd.roots_[r], i);

  // Weyl closure as root permutations.
  std::vector<std::vector<int>> gens(n, std::vector<int>(2 * P));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < 2 * P; ++r) {
      std::vector<int> img = rd.roots_[r];
      int c = rd.pairing_[r][i];
      img[i] -= c;
      gens[i][r] = index.at(img);
    }
  std::set<std::vector<int>> wseen;
  std::vector<int> id(2 * P);
  std::iota(id.begin(), id.end(), 0);
  rd.weyl_.push_back(id);
  wseen.insert(id);
  for (size_t k = 0; k < rd.weyl_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> w(2 * P);
      for (int r = 0; r < 2 * P; ++r) w[r] = gens[i][rd.weyl_[k][r]];
      if (wseen.insert(w).second) rd.weyl_.push_back(w);
    }
  }
  return rd;
}

int RootDatum::height(int r) const {
  return std::accumulate(roots_[r].begin(), roots_[r].end(), 0);
}

int RootDatum::find_root(const std::vector<int>& coords) const {
  for (int r = 0; r < num_roots(); ++r)
    if (roots_[r] == coords) return r;
  return -1;
}

Rat RootDatum::root_value(int r, const std::vector<Rat>& v) const {
  Rat s(0);
  for (int j = 0; j < rank_; ++j) s += v[j] * Rat(pairing_[r][j]);
  return s;
}

std::vector<Rat> RootDatum::reflect(int i, const std::vector<Rat>& v) const {
  // s_i on coroot coordinates: v - <alpha_i, v> * alpha_i^vee
  int ai = find_root([&] {
    std::vector<int> u(rank_, 0);
    u[i] = 1;
    return u;
  }());
  Rat c = root_value(ai, v);
  std::vector<Rat> w = v;
  w[i] -= c;
  return w;
}

std::vector<Rat> RootDatum::dominant(const std::vector<Rat>& lambda) const {
  std::vector<Rat> v = lambda;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> u(rank_, 0);
      u[i] = 1;
      int ai = find_root(u);
      if (root_value(ai, v) < 0) {
        v = reflect(i, v);
        changed = true;
      }
    }
  }
  return v;
}

bool RootDatum::is_cocharacter(const std::vector<Rat>& lambda) const {
  if (isogeny_ == Isogeny::SimplyConnected) {
    for (const Rat& c : lambda)
      if (!is_integer(c)) return false;
    return true;
  }
  // adjoint: the coweight lattice, <alpha_i, lambda> integral for all i
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> u(rank_, 0);
    u[i] = 1;
    if (!is_integer(root_value(find_root(u), lambda))) return false;
  }
  return true;
}

long RootDatum::period_m(const BuildingPoint& x) const {
  Int m = 1;
  for (int r = 0; r < num_roots(); ++r) {
    Rat v = root_value(r, x.x);
    Int d = v.get_den();
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
  }
  return to_long(m);
}

// ---------------------------------------------------------------------------
// Chevalley structure constants.
//
// Signs are pinned by the extraspecial-pair convention with respect to the
// positive-root order above (height, then lex): for each positive root of
// height >= 2 the minimal decomposition pair gets N = +(p+1).  All remaining
// constants follow from antisymmetry, N(-b,-c) = -N(b,c), and Jacobi
// propagation, and the full table is re-verified exhaustively.
// ---------------------------------------------------------------------------

namespace {

struct PairKey {
  int b, c;     // canonical ordered pair
  int sign;     // value of N(orig) = sign * N(canonical)
};

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootDatum& rd) : rd_(&rd) {
  const int R = rd.num_roots();
  const int n = rd.rank();
  dim_ = R + n;
  nconst_.assign(R, std::vector<long>(R, 0));

  auto add_coords = [&](int b, int c) {
    std::vector<int> s(n);
    for (int j = 0; j < n; ++j) s[j] = rd.root(b)[j] + rd.root(c)[j];
    return s;
  };
  auto sum_root = [&](int b, int c) { return rd.find_root(add_coords(b, c)); };

  // Root-string magnitudes: |N(b,c)| = p+1, p = max{k : beta_c - k beta_b in Phi}.
  auto magnitude = [&](int b, int c) -> long {
    int p = 0;
    std::vector<int> v = rd.root(c);
    while (true) {
      for (int j = 0; j < n; ++j) v[j] -= rd.root(b)[j];
      if (rd.find_root(v) < 0) break;
      ++p;
    }
    return p + 1;
  };

  // Canonical variable classes under N(c,b) = -N(b,c), N(-b,-c) = -N(b,c).
  auto canonical = [&](int b, int c) -> PairKey {
    int nb = rd.negative_of(b), nc = rd.negative_of(c);
    std::array<PairKey, 4> cand = {
        PairKey{b, c, 1}, PairKey{c, b, -1}, PairKey{nb, nc, -1}, PairKey{nc, nb, 1}};
    PairKey best = cand[0];
    for (auto& k : cand)
      if (std::make_pair(k.b, k.c) < std::make_pair(best.b, best.c)) best = k;
    return best;
  };

  std::map<std::pair<int, int>, long> value;  // canonical pair -> N
  auto lookup = [&](int b, int c) -> std::optional<long> {
    PairKey k = canonical(b, c);
    auto it = value.find({k.b, k.c});
    if (it == value.end()) return std::nullopt;
    return k.sign * it->second;
  };
  auto assign = [&](int b, int c, long v) {
    PairKey k = canonical(b, c);
    auto it = value.find({k.b, k.c});
    long canon_v = k.sign * v;
    if (it != value.end()) {
      if (it->second != canon_v)
        throw std::logic_error("ChevalleyBasis: inconsistent sign propagation");
      return;
    }
    value[{k.b, k.c}] = canon_v;
  };

  // Seed: extraspecial pairs.
  for (int d = 0; d < rd.num_positive(); ++d) {
    if (rd.height(d) < 2) continue;
    for (int a = 0; a < rd.num_positive(); ++a) {
      std::vector<int> rest(n);
      for (int j = 0; j < n; ++j) rest[j] = rd.root(d)[j] - rd.root(a)[j];
      int other = rd.find_root(rest);
      if (other >= 0 && other < rd.num_positive()) {
        assign(a, other, magnitude(a, other));
        break;  // a ranges in increasing order: first hit is the extraspecial pair
      }
    }
  }

  // All pairs needing values.
  std::vector<std::pair<int, int>> wanted;
  for (int b = 0; b < R; ++b)
    for (int c = 0; c < R; ++c) {
      if (rd.negative_of(b) == c) continue;
      if (b == c) continue;
      if (sum_root(b, c) < 0) continue;
      PairKey k = canonical(b, c);
      if (k.b == b && k.c == c) wanted.push_back({b, c});
    }

  // Jacobi propagation on root triples.  For roots x,y,z, expanding
  // [[e_x,e_y],e_z] + cyclic and projecting to a root line gives a relation
  // among products of structure constants; pairs summing to zero contribute
  // the known Cartan terms <.,.>.
  auto pair_int = [&](int root, int coroot_of) {
    // <beta_root, beta_coroot_of^vee>
    long s = 0;
    for (int j = 0; j < n; ++j)
      s += static_cast<long>(rd.coroot(coroot_of)[j]) * rd.pair_simple_coroot(root, j);
    return s;
  };

  struct Term {  // product N(a1,b1)*N(a2,b2), or a known constant
    bool known;
    long cst;
    std::array<std::pair<int, int>, 2> factors;
    int nfac;
  };

  auto eval_triple = [&](int x, int y, int z, std::vector<Term>& terms) {
    // contributions of [[e_x, e_y], e_z] to the line e_{x+y+z}
    auto contribute = [&](int a, int b, int c) {
      // [[e_a, e_b], e_c]
      if (rd.negative_of(a) == b) {
        // [h_{a-coroot}, e_c] = <c, a^vee> e_c   (h from [e_a, e_{-a}] = h_a)
        terms.push_back({true, pair_int(c, a), {}, 0});
        return;
      }
      int ab = sum_root(a, b);
      if (ab < 0) return;
      if (rd.negative_of(ab) == c) return;  // lands in the Cartan, not on our line
      int abc = sum_root(ab, c);
      if (abc < 0) return;
      Term t;
      t.known = false;
      t.cst = 0;
      t.factors[0] = {a, b};
      t.factors[1] = {ab, c};
      t.nfac = 2;
      terms.push_back(t);
    };
    contribute(x, y, z);
    contribute(y, z, x);
    contribute(z, x, y);
  };

  bool progress = true;
  auto unknowns_of = [&](const Term& t, std::set<std::pair<int, int>>& u) {
    if (t.known) return;
    for (int i = 0; i < t.nfac; ++i) {
      PairKey k = canonical(t.factors[i].first, t.factors[i].second);
      if (!value.count({k.b, k.c})) u.insert({k.b, k.c});
    }
  };
  auto eval_term = [&](const Term& t) -> long {
    if (t.known) return t.cst;
    long v = 1;
    for (int i = 0; i < t.nfac; ++i) {
      auto f = lookup(t.factors[i].first, t.factors[i].second);
      v *= *f;
    }
    return v;
  };

  while (progress) {
    progress = false;
    size_t missing = 0;
    for (auto& w : wanted)
      if (!value.count(w)) ++missing;
    if (missing == 0) break;
    for (int x = 0; x < R && !progress; ++x)
      for (int y = x + 1; y < R && !progress; ++y)
        for (int z = y + 1; z < R && !progress; ++z) {
          // need the triple to land on a root line
          std::vector<int> s(n);
          for (int j = 0; j < n; ++j)
            s[j] = rd.root(x)[j] + rd.root(y)[j] + rd.root(z)[j];
          if (rd.find_root(s) < 0) continue;
          std::vector<Term> terms;
          eval_triple(x, y, z, terms);
          std::set<std::pair<int, int>> unk;
          for (auto& t : terms) unknowns_of(t, unk);
          if (unk.size() != 1) continue;
          auto var = *unk.begin();
          long mag = magnitude(var.first, var.second);
          long valid = 0;
          int nvalid = 0;
          for (long trial : {mag, -mag}) {
            value[var] = trial;
            long total = 0;
            for (auto& t : terms) total += eval_term(t);
            value.erase(var);
            if (total == 0) {
              valid = trial;
              ++nvalid;
            }
          }
          if (nvalid == 1) {
            value[var] = valid;
            progress = true;
          } else if (nvalid == 0) {
            throw std::logic_error("ChevalleyBasis: no consistent sign for a pair");
          }
        }
  }

  for (auto& w : wanted)
    if (!value.count(w))
      throw std::logic_error("ChevalleyBasis: sign propagation incomplete for type " + rd.type());

  for (int b = 0; b < R; ++b)
    for (int c = 0; c < R; ++c) {
      if (b == c || rd.negative_of(b) == c || sum_root(b, c) < 0) continue;
      nconst_[b][c] = *lookup(b, c);
    }

  // Full bracket table.
  table_.assign(static_cast<size_t>(dim_) * dim_, {});
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      std::vector<ChevalleyTerm>& out = table_[static_cast<size_t>(a) * dim_ + b];
      if (a >= R && b >= R) continue;  // [h,h] = 0
      if (a >= R && b < R) {
        int i = a - R;
        long c = rd.pair_simple_coroot(b, i);
        if (c != 0) out.push_back({b, c});
        continue;
      }
      if (a < R && b >= R) {
        int i = b - R;
        long c = -rd.pair_simple_coroot(a, i);
        if (c != 0) out.push_back({a, c});
        continue;
      }
      // both roots
      if (rd.negative_of(a) == b) {
        bool apos = rd.is_positive(a);
        // [e_beta, e_{-beta}] = h_beta for positive beta
        int base = apos ? a : b;
        long sgn = apos ? 1 : -1;
        for (int j = 0; j < n; ++j) {
          long cj = sgn * rd.coroot(base)[j];
          if (cj != 0) out.push_back({R + j, cj});
        }
        continue;
      }
      int ab = sum_root(a, b);
      if (ab >= 0 && nconst_[a][b] != 0) out.push_back({ab, nconst_[a][b]});
    }

  verify_jacobi();
}

std::vector<long> ChevalleyBasis::bracket_vec(const std::vector<long>& u,
                                              const std::vector<long>& v) const {
  std::vector<long> w(dim_, 0);
  for (int a = 0; a < dim_; ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < dim_; ++b) {
      if (v[b] == 0) continue;
      for (const auto& t : bracket(a, b)) w[t.line] += u[a] * v[b] * t.coeff;
    }
  }
  return w;
}

void ChevalleyBasis::verify_jacobi() const {
  for (int a = 0; a < dim_; ++a)
    for (int b = a; b < dim_; ++b) {
      // antisymmetry
      std::vector<long> ab(dim_, 0), ba(dim_, 0);
      for (const auto& t : bracket(a, b)) ab[t.line] += t.coeff;
      for (const auto& t : bracket(b, a)) ba[t.line] += t.coeff;
      for (int i = 0; i < dim_; ++i)
        if (ab[i] + ba[i] != 0)
          throw std::logic_error("ChevalleyBasis: bracket not antisymmetric");
      for (int c = b; c < dim_; ++c) {
        std::vector<long> ea(dim_, 0), eb(dim_, 0), ec(dim_, 0);
        ea[a] = 1;
        eb[b] = 1;
        ec[c] = 1;
        auto t1 = bracket_vec(bracket_vec(ea, eb), ec);
        auto t2 = bracket_vec(bracket_vec(eb, ec), ea);
        auto t3 = bracket_vec(bracket_vec(ec, ea), eb);
        for (int i = 0; i < dim_; ++i)
          if (t1[i] + t2[i] + t3[i] != 0)
            throw std::logic_error("ChevalleyBasis: Jacobi identity fails for type " +
                                   rd_->type());
      }
    }
}

BuildingPoint parse_building_point(const std::vector<std::string>& coords) {
  BuildingPoint x;
  for (const auto& s : coords) x.x.push_back(parse_rat(s));
  return x;
}

std::vector<std::string> building_point_str(const BuildingPoint& x) {
  std::vector<std::string> out;
  for (const auto& c : x.x) out.push_back(rat_str(c));
  return out;
}

}  // namespace glie
