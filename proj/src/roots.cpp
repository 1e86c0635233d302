#include "liekam/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liekam/matrix.hpp"

namespace liekam {

std::string type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E: return "E";
    case LieType::F: return "F";
    case LieType::G: return "G";
  }
  return "?";
}

LieType type_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty Lie type");
  switch (s[0]) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    case 'E': case 'e': return LieType::E;
    case 'F': case 'f': return LieType::F;
    case 'G': case 'g': return LieType::G;
  }
  throw std::invalid_argument("unknown Lie type '" + s + "'");
}

std::string Root::str() const {
  bool half = false;
  for (int v : c2)
    if (v % 2 != 0) half = true;
  std::ostringstream os;
  if (half) os << "1/2(";
  bool first = true;
  for (std::size_t i = 0; i < c2.size(); ++i) {
    int v = half ? c2[i] : c2[i] / 2;
    if (v == 0) continue;
    if (v > 0 && !first) os << '+';
    if (v == -1) os << '-';
    else if (v != 1) os << v;
    os << 'L' << (i + 1);
    first = false;
  }
  if (half) os << ')';
  return os.str();
}

namespace {

Coords2 unit2(int ambient, int i, int v) {
  Coords2 c(ambient, 0);
  c[i] = v;
  return c;
}

void add_pm_pairs(std::vector<Coords2>& out, int ambient, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    for (int j = i + 1; j < hi; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Coords2 c(ambient, 0);
          c[i] = si;
          c[j] = sj;
          out.push_back(c);
        }
}

// E8 half roots: all coordinates ±1 (doubled), even number of -1 entries.
void add_e8_halves(std::vector<Coords2>& out, bool (*keep)(const Coords2&)) {
  for (int mask = 0; mask < 256; ++mask) {
    Coords2 c(8);
    int minus = 0;
    for (int i = 0; i < 8; ++i) {
      c[i] = (mask >> i) & 1 ? -1 : 1;
      if (c[i] < 0) ++minus;
    }
    if (minus % 2 != 0) continue;
    if (keep == nullptr || keep(c)) out.push_back(c);
  }
}

}  // namespace

RootSystem RootSystem::build(LieType type, int rank) {
  auto reject = [&](const std::string& why) {
    throw std::invalid_argument("unsupported root system " + type_name(type) +
                                std::to_string(rank) + ": " + why);
  };
  switch (type) {
    case LieType::A:
      if (rank < 1 || rank > 8) reject("rank must be in 1..8");
      break;
    case LieType::B:
    case LieType::C:
    case LieType::D:
      if (rank < 2 || rank > 8) reject("rank must be in 2..8");
      break;
    case LieType::E:
      if (rank < 6 || rank > 8) reject("rank must be in 6..8");
      break;
    case LieType::F:
      if (rank != 4) reject("rank must be 4");
      break;
    case LieType::G:
      if (rank != 2) reject("rank must be 2");
      break;
  }

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;

  std::vector<Coords2> coords;
  std::vector<Coords2> simple;
  int ambient = 0;

  switch (type) {
    case LieType::A: {
      ambient = rank + 1;
      for (int i = 0; i < ambient; ++i)
        for (int j = 0; j < ambient; ++j)
          if (i != j) {
            Coords2 c(ambient, 0);
            c[i] = 2;
            c[j] = -2;
            coords.push_back(c);
          }
      for (int i = 0; i < rank; ++i) {
        Coords2 c(ambient, 0);
        c[i] = 2;
        c[i + 1] = -2;
        simple.push_back(c);
      }
      break;
    }
    case LieType::B: {
      ambient = rank;
      add_pm_pairs(coords, ambient, 0, ambient);
      for (int i = 0; i < ambient; ++i)
        for (int s : {2, -2}) coords.push_back(unit2(ambient, i, s));
      for (int i = 0; i + 1 < rank; ++i) {
        Coords2 c(ambient, 0);
        c[i] = 2;
        c[i + 1] = -2;
        simple.push_back(c);
      }
      simple.push_back(unit2(ambient, rank - 1, 2));
      break;
    }
    case LieType::C: {
      ambient = rank;
      add_pm_pairs(coords, ambient, 0, ambient);
      for (int i = 0; i < ambient; ++i)
        for (int s : {4, -4}) coords.push_back(unit2(ambient, i, s));
      for (int i = 0; i + 1 < rank; ++i) {
        Coords2 c(ambient, 0);
        c[i] = 2;
        c[i + 1] = -2;
        simple.push_back(c);
      }
      simple.push_back(unit2(ambient, rank - 1, 4));
      break;
    }
    case LieType::D: {
      ambient = rank;
      add_pm_pairs(coords, ambient, 0, ambient);
      for (int i = 0; i + 1 < rank; ++i) {
        Coords2 c(ambient, 0);
        c[i] = 2;
        c[i + 1] = -2;
        simple.push_back(c);
      }
      Coords2 c(ambient, 0);
      c[rank - 2] = 2;
      c[rank - 1] = 2;
      simple.push_back(c);
      break;
    }
    case LieType::E: {
      ambient = 8;
      if (rank == 8) {
        add_pm_pairs(coords, ambient, 0, 8);
        add_e8_halves(coords, nullptr);
      } else if (rank == 7) {
        add_pm_pairs(coords, ambient, 0, 6);
        for (int s : {2, -2}) {
          Coords2 c(ambient, 0);
          c[7] = s;
          c[6] = -s;
          coords.push_back(c);
        }
        add_e8_halves(coords, [](const Coords2& c) { return c[6] == -c[7]; });
      } else {
        add_pm_pairs(coords, ambient, 0, 5);
        add_e8_halves(coords, [](const Coords2& c) { return c[5] == c[6] && c[6] == -c[7]; });
      }
      // Bourbaki simple roots; alpha_1 is the half root (L1+L8-L2-...-L7)/2.
      simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      {
        Coords2 c(ambient, 0);
        c[0] = 2;
        c[1] = 2;
        simple.push_back(c);
      }
      for (int k = 0; k + 2 < rank; ++k) {
        Coords2 c(ambient, 0);
        c[k + 1] = 2;
        c[k] = -2;
        simple.push_back(c);
      }
      break;
    }
    case LieType::F: {
      ambient = 4;
      add_pm_pairs(coords, ambient, 0, 4);
      for (int i = 0; i < 4; ++i)
        for (int s : {2, -2}) coords.push_back(unit2(ambient, i, s));
      for (int mask = 0; mask < 16; ++mask) {
        Coords2 c(4);
        for (int i = 0; i < 4; ++i) c[i] = (mask >> i) & 1 ? -1 : 1;
        coords.push_back(c);
      }
      simple.push_back({0, 2, -2, 0});
      simple.push_back({0, 0, 2, -2});
      simple.push_back({0, 0, 0, 2});
      simple.push_back({1, -1, -1, -1});
      break;
    }
    case LieType::G: {
      ambient = 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) {
            Coords2 c(3, 0);
            c[i] = 2;
            c[j] = -2;
            coords.push_back(c);
          }
      for (int i = 0; i < 3; ++i) {  // long roots +-(2Li - Lj - Lk)
        Coords2 l(3, -2);
        l[i] = 4;
        coords.push_back(l);
        for (auto& v : l) v = -v;
        coords.push_back(l);
      }
      simple.push_back({2, -2, 0});
      simple.push_back({-4, 2, 2});
      break;
    }
  }
  rs.ambient_ = ambient;

  // Simple-root coordinates for every root (exact solve; coefficients are integers).
  RatMat smat(ambient, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < ambient; ++i) smat.at(i, j) = simple[j][i];

  int max_norm = 0;
  for (const auto& c : coords) {
    int n = 0;
    for (int v : c) n += v * v;
    max_norm = std::max(max_norm, n);
  }

  for (const auto& c : coords) {
    Root r;
    r.c2 = c;
    RatVec b(ambient);
    for (int i = 0; i < ambient; ++i) b[i] = c[i];
    auto sol = smat.solve(b);
    if (!sol) throw std::logic_error("root outside simple-root span");
    int h = 0;
    bool nonneg = true, nonpos = true;
    for (int j = 0; j < rank; ++j) {
      if (denominator((*sol)[j]) != 1)
        throw std::logic_error("non-integer simple-root coordinate");
      int a = static_cast<int>(numerator((*sol)[j]));
      r.simple_coords.push_back(a);
      h += a;
      if (a < 0) nonneg = false;
      if (a > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed simple coordinates");
    r.height = h;
    r.positive = nonneg;
    r.length_class = (r.norm2_times4() == max_norm) ? LengthClass::Long : LengthClass::Short;
    rs.roots_.push_back(std::move(r));
  }

  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.c2 < b.c2;
  });

  const int n = static_cast<int>(rs.roots_.size());
  for (int i = 0; i < n; ++i) rs.index_[rs.roots_[i].c2] = i;

  rs.neg_.resize(n);
  for (int i = 0; i < n; ++i) {
    Coords2 m = rs.roots_[i].c2;
    for (auto& v : m) v = -v;
    rs.neg_[i] = rs.index_.at(m);
  }

  rs.sum_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (rs.neg_[i] == j) {
        rs.sum_[static_cast<std::size_t>(i) * n + j] = -2;
        continue;
      }
      Coords2 s = rs.roots_[i].c2;
      for (int k = 0; k < ambient; ++k) s[k] += rs.roots_[j].c2[k];
      rs.sum_[static_cast<std::size_t>(i) * n + j] = rs.index_of(s);
    }

  rs.n_pos_ = n / 2;
  rs.pos_order_.assign(n, -1);
  {
    int ord = 0;
    for (int i = 0; i < n; ++i)
      if (rs.roots_[i].positive) rs.pos_order_[i] = ord++;
  }

  for (const auto& sc : simple) {
    auto it = rs.index_.find(sc);
    if (it == rs.index_.end()) throw std::logic_error("simple root missing from root list");
    rs.simple_.push_back(it->second);
  }
  return rs;
}

int RootSystem::index_of(const Coords2& c2) const {
  auto it = index_.find(c2);
  return it == index_.end() ? -1 : it->second;
}

Coords2 RootSystem::reflect(const Root& alpha, const Root& beta) const {
  int k = beta.pairing(alpha);
  Coords2 out = beta.c2;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * alpha.c2[i];
  return out;
}

Coords2 parse_root_expr(const std::string& s, int ambient) {
  Coords2 c(ambient, 0);
  bool half = s.rfind("1/2(", 0) == 0;
  std::string body = half ? s.substr(4, s.size() - 5) : s;
  int sign = 1, coef = 0;
  bool have_coef = false;
  for (std::size_t i = 0; i < body.size();) {
    char ch = body[i];
    if (ch == '+') { sign = 1; ++i; }
    else if (ch == '-') { sign = -1; ++i; }
    else if (ch >= '0' && ch <= '9') { coef = coef * 10 + (ch - '0'); have_coef = true; ++i; }
    else if (ch == 'L') {
      ++i;
      int idx = 0;
      while (i < body.size() && body[i] >= '0' && body[i] <= '9') idx = idx * 10 + (body[i++] - '0');
      if (idx < 1 || idx > ambient)
        throw std::invalid_argument("coordinate L" + std::to_string(idx) + " out of range");
      c[idx - 1] += sign * (have_coef ? coef : 1) * (half ? 1 : 2);
      sign = 1;
      coef = 0;
      have_coef = false;
    } else {
      throw std::invalid_argument("cannot parse root expression '" + s + "'");
    }
  }
  return c;
}

}  // namespace liekam
