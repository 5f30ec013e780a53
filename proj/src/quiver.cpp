#include "kql/quiver.hpp"

#include <cmath>

namespace kql {

int FramedQuiver::findArrow(const std::string& id) const {
  for (int i = 0; i < arrowCount(); ++i)
    if (arrows[i].id == id) return i;
  throw InputError("unknown arrow id '" + id + "'");
}

bool FramedQuiver::sameShape(const FramedQuiver& o) const {
  if (base.group.family != o.base.group.family ||
      base.group.m != o.base.group.m || r != o.r)
    return false;
  return arrows.size() == o.arrows.size();
}

McKayQuiver mckay_quiver(const CharacterTable& ct, double tol) {
  McKayQuiver q;
  q.group = ct.group;
  q.vertices = ct.irreps();
  q.mult.assign(q.vertices, std::vector<int>(q.vertices, 0));
  for (int i = 0; i < q.vertices; ++i) {
    std::vector<Cx> prod(ct.classes());
    for (int c = 0; c < ct.classes(); ++c) prod[c] = ct.chi[i][c] * ct.chiL[c];
    for (int j = 0; j < q.vertices; ++j) {
      const Cx p = ct.inner(prod, ct.chi[j]);
      const long n = std::lround(p.real());
      if (std::abs(p - Cx(double(n), 0.0)) > tol || n < 0)
        throw PreconditionError("mckay: arrow count not a nonnegative integer");
      q.mult[j][i] = static_cast<int>(n);
    }
  }
  for (int i = 0; i < q.vertices; ++i)
    for (int j = 0; j < q.vertices; ++j)
      if (q.mult[i][j] != q.mult[j][i])
        throw PreconditionError("mckay: adjacency not symmetric");

  // Arrows, both orientations per edge, lexicographic copy order.
  const bool cyclic = q.group.isCyclic();
  const int m = q.group.m;
  int n = 0;
  auto mkId = [&n]() { return "a" + std::to_string(n++); };
  for (int i = 0; i < q.vertices; ++i) {
    if (q.mult[i][i] > 0) {
      if (q.mult[i][i] % 2 != 0)
        throw PreconditionError("mckay: odd loop multiplicity");
      // loops pair up among themselves (trivial group: B1, B2)
      for (int p = 0; p < q.mult[i][i] / 2; ++p) {
        Arrow fwd{i, i, +1, -1,
                  cyclic ? ArrowRole::DynkinX : ArrowRole::DynkinPlain, mkId()};
        Arrow bwd{i, i, -1, -1,
                  cyclic ? ArrowRole::DynkinY : ArrowRole::DynkinPlain, mkId()};
        int fi = static_cast<int>(q.arrows.size());
        fwd.reverse = fi + 1;
        bwd.reverse = fi;
        q.arrows.push_back(fwd);
        q.arrows.push_back(bwd);
      }
    }
    for (int j = i + 1; j < q.vertices; ++j) {
      for (int c = 0; c < q.mult[i][j]; ++c) {
        ArrowRole fr = ArrowRole::DynkinPlain, br = ArrowRole::DynkinPlain;
        if (cyclic) {
          // every edge of the cycle pairs one weight-raising arrow with one
          // weight-lowering arrow; for m = 2 the two parallel edges split them
          bool fwdRaises = (j == (i + 1) % m);
          if (m == 2) fwdRaises = (c == 0);
          fr = fwdRaises ? ArrowRole::DynkinX : ArrowRole::DynkinY;
          br = fwdRaises ? ArrowRole::DynkinY : ArrowRole::DynkinX;
        }
        Arrow fwd{i, j, +1, -1, fr, mkId()};
        Arrow bwd{j, i, -1, -1, br, mkId()};
        int fi = static_cast<int>(q.arrows.size());
        fwd.reverse = fi + 1;
        bwd.reverse = fi;
        q.arrows.push_back(fwd);
        q.arrows.push_back(bwd);
      }
    }
  }
  return q;
}

std::vector<int> delta(const CharacterTable& ct) { return ct.dims; }

FramedQuiver frame(const McKayQuiver& q, int r) {
  if (r < 1) throw InputError("frame: r must be >= 1");
  FramedQuiver f;
  f.base = q;
  f.r = r;
  f.arrows = q.arrows;
  for (int t = 0; t < r; ++t) {
    Arrow out{kInfVertex, 0, +1, -1, ArrowRole::FrameOut,
              "b" + std::to_string(t)};
    f.arrows.push_back(out);
  }
  for (int t = 0; t < r; ++t) {
    Arrow back{0, kInfVertex, -1, -1, ArrowRole::FrameBack,
               "c" + std::to_string(t)};
    int bi = static_cast<int>(q.arrows.size()) + t;
    back.reverse = bi;
    f.arrows.push_back(back);
    f.arrows[bi].reverse = static_cast<int>(f.arrows.size()) - 1;
  }
  return f;
}

std::vector<int> affineCartanApply(const McKayQuiver& q,
                                   const std::vector<int>& d) {
  std::vector<int> out(q.vertices, 0);
  for (int i = 0; i < q.vertices; ++i) {
    int acc = 2 * d[i];
    for (int j = 0; j < q.vertices; ++j) acc -= q.mult[i][j] * d[j];
    out[i] = acc;
  }
  return out;
}

std::vector<std::vector<int>> expectedAffineAdjacency(const GroupSpec& g) {
  const int n = g.vertexCount();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  auto edge = [&adj](int i, int j, int c = 1) {
    adj[i][j] += c;
    adj[j][i] += c;
  };
  switch (g.family) {
    case Family::A:
      if (g.m == 1) {
        adj[0][0] = 2;  // Jordan quiver: two loop arrows
      } else if (g.m == 2) {
        edge(0, 1, 2);  // doubled edge of affine A_1
      } else {
        for (int k = 0; k < g.m; ++k) edge(k, (k + 1) % g.m);
      }
      break;
    case Family::D: {
      const int k = g.m - 2;  // phi chain has k-1 nodes at indices 4..k+2
      edge(0, 4);
      edge(1, 4);
      edge(2, 3 + k - 1);
      edge(3, 3 + k - 1);
      for (int j = 1; j < k - 1; ++j) edge(3 + j, 4 + j);
      break;
    }
    case Family::E6:
      edge(0, 3);
      edge(1, 4);
      edge(2, 5);
      edge(3, 6);
      edge(4, 6);
      edge(5, 6);
      break;
    case Family::E7:
      edge(0, 2);
      edge(1, 3);
      edge(2, 6);
      edge(3, 5);
      edge(4, 7);
      edge(5, 7);
      edge(6, 7);
      break;
    case Family::E8:
      edge(0, 1);
      edge(1, 3);
      edge(3, 5);
      edge(5, 7);
      edge(7, 8);
      edge(8, 6);
      edge(6, 2);
      edge(8, 4);
      break;
  }
  return adj;
}

}  // namespace kql
