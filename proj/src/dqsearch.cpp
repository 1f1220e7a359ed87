#include "qlens/dqsearch.hpp"

#include <stdexcept>
#include <utility>

#include "qlens/graphs.hpp"

namespace qlens {

namespace {

void add_scaled(Affine& dst, const Affine& src, i64 sgn) {
  dst.c += sgn * src.c;
  for (const auto& [var, coeff] : src.v) {
    i64 next = (dst.v[var] += sgn * coeff);
    if (next == 0) dst.v.erase(var);
  }
}

// g = x*a + y*b with g >= 0.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  i64 x1 = 0, y1 = 0;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::optional<std::vector<i64>> solve_integer_system(const std::vector<Affine>& rows, int nvars) {
  const int nrows = static_cast<int>(rows.size());
  std::vector<std::vector<i64>> col(nvars, std::vector<i64>(nrows, 0));
  std::vector<i64> rhs(nrows, 0);
  for (int i = 0; i < nrows; ++i) {
    rhs[i] = -rows[i].c;
    for (const auto& [var, coeff] : rows[i].v) col[var][i] = coeff;
  }
  std::vector<std::vector<i64>> U(nvars, std::vector<i64>(nvars, 0));
  for (int j = 0; j < nvars; ++j) U[j][j] = 1;

  // Column echelon pass: each row claims at most one pivot column; combining
  // columns is unimodular, so U maps echelon variables back to originals.
  std::vector<char> used(nvars, 0);
  std::vector<int> pivot_col(nrows, -1);
  for (int i = 0; i < nrows; ++i) {
    int j0 = -1;
    for (int j = 0; j < nvars; ++j) {
      if (used[j] || col[j][i] == 0) continue;
      if (j0 < 0) {
        j0 = j;
        continue;
      }
      i64 a = col[j0][i], b = col[j][i], x = 0, y = 0;
      i64 g = ext_gcd(a, b, x, y);
      i64 pa = a / g, pb = b / g;
      for (int t = i; t < nrows; ++t) {
        i64 c0 = col[j0][t], cj = col[j][t];
        col[j0][t] = x * c0 + y * cj;
        col[j][t] = -pb * c0 + pa * cj;
      }
      for (int t = 0; t < nvars; ++t) {
        i64 u0 = U[j0][t], uj = U[j][t];
        U[j0][t] = x * u0 + y * uj;
        U[j][t] = -pb * u0 + pa * uj;
      }
    }
    if (j0 >= 0) {
      used[j0] = 1;
      pivot_col[i] = j0;
    }
  }

  std::vector<i64> z(nvars, 0), acc(nrows, 0);
  for (int i = 0; i < nrows; ++i) {
    if (pivot_col[i] >= 0) {
      int j0 = pivot_col[i];
      i64 g = col[j0][i];
      i64 rem = rhs[i] - acc[i];
      if (rem % g != 0) return std::nullopt;
      i64 zi = rem / g;
      z[j0] = zi;
      if (zi != 0) {
        for (int t = i; t < nrows; ++t) acc[t] += zi * col[j0][t];
      }
    } else if (acc[i] != rhs[i]) {
      return std::nullopt;
    }
  }
  std::vector<i64> sol(nvars, 0);
  for (int j = 0; j < nvars; ++j) {
    if (z[j] == 0) continue;
    for (int v = 0; v < nvars; ++v) sol[v] += U[j][v] * z[j];
  }
  return sol;
}

DqSearchOutcome exhaustive_dq_search(const WeightVector& m, const WeightVector& n,
                                     unsigned long long budget, bool with_unit_constraint) {
  if (m.r != n.r || m.levels() != n.levels())
    throw std::invalid_argument("weight vectors must share modulus and length");
  const i64 r = m.r;
  const int levels = m.levels();

  DqSearchOutcome out;
  if (ideal_invariant(m) != ideal_invariant(n)) {
    out.exhausted = true;
    out.note = "unequal gcd chains";
    return out;
  }

  const int nsub = levels * (levels - 1) / 2;
  const int nvars = nsub * static_cast<int>(r);
  std::vector<std::vector<int>> var_base(levels, std::vector<int>(levels, -1));
  {
    int next = 0;
    for (int depth = 1; depth < levels; ++depth) {
      for (int a = depth; a < levels; ++a) {
        var_base[a][a - depth] = next;
        next += static_cast<int>(r);
      }
    }
  }

  auto try_tuple = [&](const std::vector<i64>& ell) -> std::optional<BlockMat> {
    // Block (a, b) as an r x r grid of affine forms in the free first columns.
    std::vector<std::vector<Affine>> grid(static_cast<size_t>(levels) * levels);
    std::vector<Affine> sysrows;
    auto cell = [&](int a, int b) -> std::vector<Affine>& {
      return grid[static_cast<size_t>(a) * levels + b];
    };
    for (int a = 0; a < levels; ++a) {
      IntMat D = shift_matrix(r, ell[a]) * perm_matrix(r, mod_div(n.weights[a], m.weights[a], r));
      auto& g = cell(a, a);
      g.assign(static_cast<size_t>(r) * r, Affine{});
      for (i64 i = 0; i < r; ++i) {
        for (i64 j = 0; j < r; ++j) {
          g[i * r + j].c = D.at(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
    for (int depth = 1; depth < levels; ++depth) {
      for (int a = depth; a < levels; ++a) {
        const int b = a - depth;
        const i64 p = n.weights[a], q = m.weights[b];
        std::vector<Affine> Zg(static_cast<size_t>(r) * r);
        for (int c = b; c < a; ++c) {
          const auto& src = cell(c, b);
          for (i64 i = 0; i < r; ++i) {
            i64 ii = mod_reduce(i + n.weights[a], r);
            for (i64 j = 0; j < r; ++j) add_scaled(Zg[i * r + j], src[ii * r + j], 1);
          }
        }
        for (int c = b + 1; c <= a; ++c) {
          const auto& src = cell(a, c);
          for (i64 j = 0; j < r; ++j) {
            i64 jj = mod_reduce(j - m.weights[c], r);
            for (i64 i = 0; i < r; ++i) add_scaled(Zg[i * r + j], src[i * r + jj], -1);
          }
        }
        std::vector<std::vector<Affine>> cols(r, std::vector<Affine>(r));
        const int base = var_base[a][b];
        for (i64 i = 0; i < r; ++i) cols[0][i].v[base + static_cast<int>(i)] = 1;
        i64 cur = 0;
        for (i64 step = 0; step + 1 < r; ++step) {
          i64 nxt = mod_reduce(cur + q, r);
          std::vector<Affine> v(r);
          for (i64 i = 0; i < r; ++i) {
            v[i] = cols[cur][i];
            add_scaled(v[i], Zg[i * r + nxt], 1);
          }
          std::vector<Affine> shifted(r);
          for (i64 i = 0; i < r; ++i) shifted[i] = std::move(v[mod_reduce(i - p, r)]);
          cols[nxt] = std::move(shifted);
          cur = nxt;
        }
        for (i64 i = 0; i < r; ++i) {
          Affine row = cols[0][mod_reduce(i + p, r)];
          add_scaled(row, cols[cur][i], -1);
          add_scaled(row, Zg[i * r + 0], -1);
          sysrows.push_back(std::move(row));
        }
        auto& g = cell(a, b);
        g.assign(static_cast<size_t>(r) * r, Affine{});
        for (i64 j = 0; j < r; ++j) {
          for (i64 i = 0; i < r; ++i) g[i * r + j] = std::move(cols[j][i]);
        }
        for (i64 i = 0; i < r; ++i) {
          for (i64 j = 0; j < r; ++j) {
            if (!dominates(m, {b + 1, j}, {a + 1, i})) sysrows.push_back(g[i * r + j]);
          }
        }
      }
    }
    if (with_unit_constraint) {
      for (int a = 0; a < levels; ++a) {
        for (i64 i = 0; i < r; ++i) {
          Affine row;
          for (int b = 0; b <= a; ++b) add_scaled(row, cell(a, b)[i * r + 0], 1);
          row.c -= (i == 0) ? 1 : 0;
          sysrows.push_back(std::move(row));
        }
      }
    }
    auto sol = solve_integer_system(sysrows, nvars);
    if (!sol) return std::nullopt;
    BlockMat H(levels, r);
    for (int a = 0; a < levels; ++a) {
      for (int b = 0; b <= a; ++b) {
        const auto& g = cell(a, b);
        IntMat& blk = H.at(a, b);
        for (i64 i = 0; i < r; ++i) {
          for (i64 j = 0; j < r; ++j) {
            const Affine& e = g[i * r + j];
            i64 val = e.c;
            for (const auto& [var, coeff] : e.v) val += coeff * (*sol)[var];
            blk.at(static_cast<int>(i), static_cast<int>(j)) = val;
          }
        }
      }
    }
    if (block_mul(H, build_B(m)) != block_mul(build_B(n), H))
      throw std::logic_error("search produced an invalid witness");
    for (int a = 0; a < levels; ++a) {
      for (int b = 0; b < a; ++b) {
        for (i64 i = 0; i < r; ++i) {
          for (i64 j = 0; j < r; ++j) {
            if (H.at(a, b).at(static_cast<int>(i), static_cast<int>(j)) != 0 &&
                !dominates(m, {b + 1, j}, {a + 1, i}))
              throw std::logic_error("search produced an invalid witness");
          }
        }
      }
    }
    if (with_unit_constraint && !check_dq1_witness(H))
      throw std::logic_error("search produced an invalid witness");
    return H;
  };

  std::vector<i64> ell(levels, 0);
  while (true) {
    if (budget != 0 && out.tuples_tried >= budget) {
      out.budget_exceeded = true;
      break;
    }
    ++out.tuples_tried;
    // Block-row 0 contains only its diagonal, so the unit-vector constraint
    // pins the first exponent to 0; other values cannot yield a witness.
    bool feasible = !(with_unit_constraint && ell[0] != 0);
    if (feasible) {
      if (auto H = try_tuple(ell)) {
        out.status = SolveStatus::found;
        out.ell = ell;
        out.H = std::move(H);
        return out;
      }
    }
    int idx = levels - 1;
    while (idx >= 0) {
      if (++ell[idx] < r) break;
      ell[idx] = 0;
      --idx;
    }
    if (idx < 0) {
      out.exhausted = true;
      break;
    }
  }
  return out;
}

}  // namespace qlens
