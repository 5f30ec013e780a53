#include "kql/group.hpp"

#include <cmath>
#include <numbers>

namespace kql {

int GroupSpec::order() const {
  switch (family) {
    case Family::A:
      return m;
    case Family::D:
      return 4 * (m - 2);
    case Family::E6:
      return 24;
    case Family::E7:
      return 48;
    case Family::E8:
      return 120;
  }
  throw PreconditionError("unknown family");
}

int GroupSpec::vertexCount() const {
  switch (family) {
    case Family::A:
      return m;
    case Family::D:
      return m + 1;
    case Family::E6:
      return 7;
    case Family::E7:
      return 8;
    case Family::E8:
      return 9;
  }
  throw PreconditionError("unknown family");
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::A:
      return "A" + std::to_string(m);
    case Family::D:
      return "D" + std::to_string(m);
    case Family::E6:
      return "E6";
    case Family::E7:
      return "E7";
    case Family::E8:
      return "E8";
  }
  return "?";
}

void GroupSpec::validate() const {
  if (family == Family::A && m < 1)
    throw InputError("group: A(m) requires m >= 1");
  if (family == Family::D && m < 4)
    throw InputError("group: D(m) requires m >= 4");
}

GroupSpec GroupSpec::parse(const std::string& s) {
  if (s == "E6") return {Family::E6, 0};
  if (s == "E7") return {Family::E7, 0};
  if (s == "E8") return {Family::E8, 0};
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D')) {
    int m = 0;
    try {
      size_t used = 0;
      m = std::stoi(s.substr(1), &used);
      if (used != s.size() - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw InputError("group: cannot parse '" + s + "'");
    }
    GroupSpec g{s[0] == 'A' ? Family::A : Family::D, m};
    g.validate();
    return g;
  }
  throw InputError("group: cannot parse '" + s + "' (expect A<m>, D<m>, E6, E7, E8)");
}

Cx CharacterTable::inner(const std::vector<Cx>& a,
                         const std::vector<Cx>& b) const {
  Cx acc(0.0, 0.0);
  for (int c = 0; c < classes(); ++c)
    acc += static_cast<double>(classSizes[c]) * a[c] * std::conj(b[c]);
  return acc / static_cast<double>(group.order());
}

namespace {

Cx root(double num, double den) {  // e^{2 pi i num/den}
  const double t = 2.0 * std::numbers::pi * num / den;
  return Cx(std::cos(t), std::sin(t));
}

CharacterTable cyclicTable(const GroupSpec& g) {
  const int m = g.m;
  CharacterTable ct;
  ct.group = g;
  ct.dims.assign(m, 1);
  ct.classSizes.assign(m, 1);
  ct.chi.assign(m, std::vector<Cx>(m));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) ct.chi[k][j] = root(double(k) * j, m);
  ct.chiL.resize(m);
  for (int j = 0; j < m; ++j) ct.chiL[j] = root(j, m) + root(-j, m);
  return ct;
}

// Binary dihedral group of order 4k, k = m-2. Classes in order:
// {1}, {-1}=a^k, {a^j, a^-j} j=1..k-1, {b a^even}, {b a^odd}.
CharacterTable binaryDihedralTable(const GroupSpec& g) {
  const int k = g.m - 2;
  CharacterTable ct;
  ct.group = g;
  const int nIrr = k + 3;
  ct.classSizes.assign(nIrr, 0);
  ct.classSizes[0] = 1;
  ct.classSizes[1] = 1;
  for (int j = 1; j < k; ++j) ct.classSizes[1 + j] = 2;
  ct.classSizes[k + 1] = k;
  ct.classSizes[k + 2] = k;

  ct.dims.assign(nIrr, 1);
  for (int j = 0; j < k - 1; ++j) ct.dims[4 + j] = 2;

  auto oneDim = [&](Cx chiA, Cx chiB) {
    std::vector<Cx> row(nIrr);
    row[0] = 1.0;
    Cx ak = 1.0;  // chi(a^k)
    for (int t = 0; t < k; ++t) ak *= chiA;
    row[1] = ak;
    Cx aj = 1.0;
    for (int j = 1; j < k; ++j) {
      aj *= chiA;
      row[1 + j] = aj;
    }
    row[k + 1] = chiB;
    row[k + 2] = chiB * chiA;
    return row;
  };

  ct.chi.resize(nIrr);
  ct.chi[0] = oneDim(1.0, 1.0);
  ct.chi[1] = oneDim(1.0, -1.0);
  if (k % 2 == 0) {
    ct.chi[2] = oneDim(-1.0, 1.0);
    ct.chi[3] = oneDim(-1.0, -1.0);
  } else {
    // b^2 = a^k = a forces chi(b)^2 = chi(a) = -1.
    ct.chi[2] = oneDim(-1.0, Cx(0.0, 1.0));
    ct.chi[3] = oneDim(-1.0, Cx(0.0, -1.0));
  }
  for (int j = 1; j < k; ++j) {
    std::vector<Cx> row(nIrr);
    row[0] = 2.0;
    row[1] = 2.0 * std::cos(std::numbers::pi * j);
    for (int t = 1; t < k; ++t)
      row[1 + t] = 2.0 * std::cos(std::numbers::pi * j * t / k);
    row[k + 1] = 0.0;
    row[k + 2] = 0.0;
    ct.chi[3 + j] = row;
  }
  ct.chiL = ct.chi[4];  // phi_1
  return ct;
}

// Hardcoded tables for the exceptional types, tautological character second
// row in each case. Class orders are fixed in the comments.
CharacterTable e6Table(const GroupSpec& g) {
  CharacterTable ct;
  ct.group = g;
  const Cx w = root(1, 3), w2 = root(2, 3);
  // classes: 1a(1) 2a(1) 4a(6) 3a(4) 3b(4) 6a(4) 6b(4)
  ct.classSizes = {1, 1, 6, 4, 4, 4, 4};
  ct.dims = {1, 1, 1, 2, 2, 2, 3};
  ct.chi = {
      {1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, w, w2, w2, w},
      {1, 1, 1, w2, w, w, w2},
      {2, -2, 0, -1, -1, 1, 1},
      {2, -2, 0, -w, -w2, w2, w},
      {2, -2, 0, -w2, -w, w, w2},
      {3, 3, -1, 0, 0, 0, 0},
  };
  ct.chiL = ct.chi[3];
  return ct;
}

CharacterTable e7Table(const GroupSpec& g) {
  CharacterTable ct;
  ct.group = g;
  const double s2 = std::sqrt(2.0);
  // classes: 1a(1) 2a(1) 4a(6) 4b(12) 3a(8) 6a(8) 8a(6) 8b(6)
  ct.classSizes = {1, 1, 6, 12, 8, 8, 6, 6};
  ct.dims = {1, 1, 2, 2, 2, 3, 3, 4};
  ct.chi = {
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, 1, -1, 1, 1, -1, -1},
      {2, -2, 0, 0, -1, 1, s2, -s2},
      {2, -2, 0, 0, -1, 1, -s2, s2},
      {2, 2, 2, 0, -1, -1, 0, 0},
      {3, 3, -1, 1, 0, 0, -1, -1},
      {3, 3, -1, -1, 0, 0, 1, 1},
      {4, -4, 0, 0, 1, -1, 0, 0},
  };
  ct.chiL = ct.chi[2];
  return ct;
}

CharacterTable e8Table(const GroupSpec& g) {
  CharacterTable ct;
  ct.group = g;
  const double fp = (1.0 + std::sqrt(5.0)) / 2.0;
  const double fm = (1.0 - std::sqrt(5.0)) / 2.0;
  // classes: 1a(1) 2a(1) 4a(30) 3a(20) 6a(20) 5a(12) 5b(12) 10a(12) 10b(12)
  ct.classSizes = {1, 1, 30, 20, 20, 12, 12, 12, 12};
  ct.dims = {1, 2, 2, 3, 3, 4, 4, 5, 6};
  ct.chi = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {2, -2, 0, -1, 1, -fm, -fp, fp, fm},
      {2, -2, 0, -1, 1, -fp, -fm, fm, fp},
      {3, 3, -1, 0, 0, fm, fp, fp, fm},
      {3, 3, -1, 0, 0, fp, fm, fm, fp},
      {4, -4, 0, 1, -1, -1, -1, 1, 1},
      {4, 4, 0, 1, 1, -1, -1, -1, -1},
      {5, 5, 1, -1, -1, 0, 0, 0, 0},
      {6, -6, 0, 0, 0, 1, 1, -1, -1},
  };
  ct.chiL = ct.chi[1];
  return ct;
}

}  // namespace

CharacterTable character_table(const GroupSpec& g) {
  g.validate();
  CharacterTable ct;
  switch (g.family) {
    case Family::A:
      ct = cyclicTable(g);
      break;
    case Family::D:
      ct = binaryDihedralTable(g);
      break;
    case Family::E6:
      ct = e6Table(g);
      break;
    case Family::E7:
      ct = e7Table(g);
      break;
    case Family::E8:
      ct = e8Table(g);
      break;
  }
  validateCharacterTable(ct);
  return ct;
}

void validateCharacterTable(const CharacterTable& ct, double tol) {
  long sq = 0;
  for (int d : ct.dims) sq += static_cast<long>(d) * d;
  if (sq != ct.group.order())
    throw PreconditionError("character table: sum of dims^2 != |G|");
  long total = 0;
  for (int s : ct.classSizes) total += s;
  if (total != ct.group.order())
    throw PreconditionError("character table: class sizes do not sum to |G|");
  for (int i = 0; i < ct.irreps(); ++i)
    for (int j = 0; j < ct.irreps(); ++j) {
      const Cx p = ct.inner(ct.chi[i], ct.chi[j]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(p - want) > tol)
        throw PreconditionError("character table: orthonormality failed at (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
    }
  for (const Cx& v : ct.chiL)
    if (std::abs(v.imag()) > tol)
      throw PreconditionError("character table: chi_L is not real");
}

}  // namespace kql
