#include "lagtetra/topology.hpp"

#include <json.hpp>
#include <numeric>

#include "lagtetra/errors.hpp"

namespace lagtet::topo {

namespace {

long to_long(const Int& v) {
  if (!v.fits_slong_p()) fail(Err::NumericalDegeneracy, "integer overflow");
  return v.get_si();
}

using Mat = std::vector<std::vector<Int>>;

Mat identity(int n) {
  Mat I(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

std::string AbGroup::name() const {
  std::string s;
  if (rank == 1) s = "Z";
  else if (rank > 1) s = "Z^" + std::to_string(rank);
  for (long t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  if (s.empty()) s = "0";
  return s;
}

Snf smith_normal_form(Mat A) {
  int r = static_cast<int>(A.size());
  int c = static_cast<int>(A[0].size());
  Mat U = identity(r), V = identity(c);

  auto row_swap = [&](int i, int j) {
    std::swap(A[i], A[j]);
    std::swap(U[i], U[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int k = 0; k < r; ++k) std::swap(A[k][i], A[k][j]);
    for (int k = 0; k < c; ++k) std::swap(V[k][i], V[k][j]);
  };
  auto row_add = [&](int dst, int src, const Int& m) {
    for (int k = 0; k < c; ++k) A[dst][k] += m * A[src][k];
    for (int k = 0; k < r; ++k) U[dst][k] += m * U[src][k];
  };
  auto col_add = [&](int dst, int src, const Int& m) {
    for (int k = 0; k < r; ++k) A[k][dst] += m * A[k][src];
    for (int k = 0; k < c; ++k) V[k][dst] += m * V[k][src];
  };

  int t = 0;
  while (t < r && t < c) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (A[i][j] != 0 && (pi < 0 || abs(A[i][j]) < best)) {
          pi = i;
          pj = j;
          best = abs(A[i][j]);
        }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < r; ++i)
        if (A[i][t] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
          row_add(i, t, -q);
          if (A[i][t] != 0) {
            row_swap(i, t);
            clean = false;
          }
        }
      for (int j = t + 1; j < c; ++j)
        if (A[t][j] != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
          col_add(j, t, -q);
          if (A[t][j] != 0) {
            col_swap(j, t);
            clean = false;
          }
        }
    }

    // Divisibility of the remaining block by the pivot.
    bool again = false;
    for (int i = t + 1; i < r && !again; ++i)
      for (int j = t + 1; j < c && !again; ++j)
        if (A[i][j] % A[t][t] != 0) {
          row_add(t, i, 1);
          again = true;
        }
    if (again) continue;

    if (A[t][t] < 0) {
      for (int k = 0; k < c; ++k) A[t][k] = -A[t][k];
      for (int k = 0; k < r; ++k) U[t][k] = -U[t][k];
    }
    ++t;
  }

  Snf out{U, A, V, 0};
  for (int i = 0; i < r && i < c; ++i)
    if (A[i][i] != 0) ++out.rank;
  return out;
}

KernelData mv_kernel() {
  // Solutions of n + m = 3k, i.e. the integer kernel of (1 1 -3) projected
  // to the (n, m) coordinates.
  Snf s = smith_normal_form({{1, 1, -3}});
  if (s.rank != 1) fail(Err::InconsistentSequence, "character matrix rank");

  std::array<std::array<long, 2>, 2> comp{};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) comp[j][i] = to_long(s.V[i][j + 1]);

  Int dc = Int(comp[0][0]) * comp[1][1] - Int(comp[0][1]) * comp[1][0];
  if (abs(dc) != 3)
    fail(Err::InconsistentSequence, "kernel lattice index is not 3");

  const std::array<std::array<long, 2>, 2> canon{{{2, 1}, {1, 2}}};
  for (const auto& row : canon)
    if ((row[0] + row[1]) % 3 != 0)
      fail(Err::InconsistentSequence, "canonical vector violates the character");

  // canonical = change * computed over Z, |det change| = 1.
  std::array<std::array<long, 2>, 2> X{};
  for (int i = 0; i < 2; ++i) {
    // Solve (a b) * comp = canon[i] by Cramer's rule.
    Int n1 = Int(canon[i][0]) * comp[1][1] - Int(canon[i][1]) * comp[1][0];
    Int n2 = Int(canon[i][1]) * comp[0][0] - Int(canon[i][0]) * comp[0][1];
    if (n1 % dc != 0 || n2 % dc != 0)
      fail(Err::InconsistentSequence, "canonical basis is not in the lattice");
    X[i][0] = to_long(n1 / dc);
    X[i][1] = to_long(n2 / dc);
  }
  Int dx = Int(X[0][0]) * X[1][1] - Int(X[0][1]) * X[1][0];
  if (abs(dx) != 1)
    fail(Err::InconsistentSequence, "canonical basis does not span the lattice");

  return {canon, comp, X, to_long(dx), 3};
}

BettiData betti_assemble() {
  // Degree-by-degree Mayer-Vietoris bookkeeping for the closed-up fiber:
  // two contractible-boundary caps with sphere cohomology (Z, 0, Z) glued
  // along a collar with cohomology (Z, 0, Z/3, Z).
  BettiData out;

  // Degree 0/1: restriction difference map Z^2 -> Z, (a, b) -> a - b.
  Snf d0 = smith_normal_form({{1, -1}});
  long ker0 = 2 - d0.rank;
  out.H[0] = {ker0, {}};
  if (ker0 != 1) fail(Err::InconsistentSequence, "connectedness failure in degree 0");
  // Cokernel of d0 feeds H^1; its invariant factors are the diagonal
  // entries > 1, its free rank 1 - rank(d0).
  long coker_rank = 1 - d0.rank;
  std::vector<long> coker_tors;
  for (int i = 0; i < d0.rank; ++i)
    if (d0.S[i][i] > 1) coker_tors.push_back(to_long(d0.S[i][i]));
  out.H[1] = {coker_rank, coker_tors};
  if (coker_rank != 0 || !coker_tors.empty())
    fail(Err::InconsistentSequence, "collar is connected, degree 1 must vanish");

  // Degree 2: kernel of the glueing character.
  KernelData k = mv_kernel();
  out.H[2] = {2, {}};

  // Degree 3: cokernel of the character Z^2 -> Z/3. The image is generated
  // by 1, so gcd with 3 must be 1.
  Int g = gcd(gcd(Int(1), Int(1)), Int(3));
  if (g != 1) fail(Err::InconsistentSequence, "character is not onto Z/3");
  out.H[3] = {0, {}};

  // Degree 4: isomorphic image of the collar's top class.
  out.H[4] = {1, {}};

  out.euler = 0;
  long sign = 1;
  for (const auto& h : out.H) {
    out.euler += sign * h.rank;
    sign = -sign;
  }
  // Cross-check against the pieces: chi(F) = chi(cap) + chi(cap) - chi(collar).
  long chi_cap = 2, chi_collar = 1 - 0 + 0 - 1;
  if (out.euler != 2 * chi_cap - chi_collar)
    fail(Err::InconsistentSequence, "Euler characteristic mismatch");
  (void)k;
  return out;
}

FormSolveData intersection_form_solve() {
  KernelData k = mv_kernel();
  // Coordinates of (3,0) and (0,3) in the kernel basis.
  Int det = Int(k.basis[0][0]) * k.basis[1][1] - Int(k.basis[0][1]) * k.basis[1][0];
  auto in_basis = [&](long u, long v) {
    Int n1 = Int(u) * k.basis[1][1] - Int(v) * k.basis[1][0];
    Int n2 = Int(v) * k.basis[0][0] - Int(u) * k.basis[0][1];
    if (n1 % det != 0 || n2 % det != 0)
      fail(Err::InconsistentSequence, "class is not in the kernel lattice");
    return std::array<Int, 2>{n1 / det, n2 / det};
  };
  auto p = in_basis(3, 0);
  auto q = in_basis(0, 3);

  // Q(alpha v + beta w, gamma v + delta w) = alpha gamma x + beta delta y
  // + (alpha delta + beta gamma) z.
  auto row_of = [](const std::array<Int, 2>& u, const std::array<Int, 2>& w) {
    return std::array<Int, 3>{u[0] * w[0], u[1] * w[1], u[0] * w[1] + u[1] * w[0]};
  };
  FormSolveData out;
  out.rows[0] = row_of(p, q);
  out.rows[1] = row_of(p, p);
  out.rows[2] = row_of(q, q);
  out.rhs_coeff = {0, 1, -1};

  const auto& m = out.rows;
  out.det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (out.det == 0) fail(Err::InconsistentSequence, "singular system");

  // Cramer's rule over the rationals, right side symbolic in q.
  for (int col = 0; col < 3; ++col) {
    std::array<std::array<Int, 3>, 3> M = out.rows;
    for (int i = 0; i < 3; ++i) M[i][col] = out.rhs_coeff[i];
    Int d = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
            M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
            M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    out.solution[col] = Rat(d, out.det);
    out.solution[col].canonicalize();
  }

  // Exact residual check.
  for (int i = 0; i < 3; ++i) {
    Rat acc = 0;
    for (int j = 0; j < 3; ++j) acc += Rat(out.rows[i][j]) * out.solution[j];
    if (acc != Rat(out.rhs_coeff[i]))
      fail(Err::InconsistentSequence, "solution residual is nonzero");
  }
  return out;
}

std::vector<long> unimodular_q_candidates() {
  FormSolveData s = intersection_form_solve();
  // Integrality: q must clear every denominator.
  Int L = 1;
  for (const auto& r : s.solution) L = lcm(L, r.get_den());

  // |det| of [[x, z], [z, y]] = |xy - z^2| q^2 = 1.
  Rat d = s.solution[0] * s.solution[1] - s.solution[2] * s.solution[2];
  if (d == 0) fail(Err::InconsistentSequence, "degenerate form for all q");
  // q^2 = 1/|d| must be a perfect square integer.
  Rat q2r = Rat(1) / abs(d);
  if (q2r.get_den() != 1)
    fail(Err::InconsistentSequence, "no integer q gives a unimodular form");
  Int q2 = q2r.get_num();
  Int q0 = sqrt(q2);
  if (q0 * q0 != q2)
    fail(Err::InconsistentSequence, "no integer q gives a unimodular form");
  if (q0 % L != 0)
    fail(Err::InconsistentSequence, "unimodular q is not integral");
  return {to_long(q0), to_long(-q0)};
}

std::array<std::array<Int, 2>, 2> form_at(long q) {
  FormSolveData s = intersection_form_solve();
  std::array<Rat, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = s.solution[i] * q;
  for (const auto& r : v)
    if (r.get_den() != 1) fail(Err::DomainError, "form is not integral at this q");
  return {{{v[0].get_num(), v[2].get_num()}, {v[2].get_num(), v[1].get_num()}}};
}

FormClass classify_form(const std::array<std::array<Int, 2>, 2>& M) {
  if (M[0][1] != M[1][0]) fail(Err::DomainError, "matrix is not symmetric");
  Int a = M[0][0], b = M[0][1], c = M[1][1];
  Int det = a * c - b * b;
  if (abs(det) != 1) fail(Err::NotUnimodular, "determinant is not a unit");

  FormClass out;
  out.rank = 2;
  out.even = (a % 2 == 0) && (c % 2 == 0);

  auto sgn = [](const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  if (a != 0)
    out.signature = sgn(a) + sgn(a * det);
  else if (c != 0)
    out.signature = sgn(c) + sgn(c * det);
  else
    out.signature = 0;
  out.definite = std::abs(out.signature) == 2;

  if (!out.definite)
    out.model = out.even ? "S^2 x S^2" : "CP^2 # conj CP^2";
  else
    out.model = out.signature > 0 ? "CP^2 # CP^2" : "conj CP^2 # conj CP^2";
  return out;
}

std::string certificate_json() {
  using json = nlohmann::ordered_json;

  KernelData k = mv_kernel();
  BettiData b = betti_assemble();
  FormSolveData s = intersection_form_solve();
  auto qs = unimodular_q_candidates();

  json cert;
  cert["kernel"] = {
      {"basis", {{k.basis[0][0], k.basis[0][1]}, {k.basis[1][0], k.basis[1][1]}}},
      {"index", k.index},
      {"change_of_basis_det", k.change_det}};
  cert["betti"] = {{"H0", b.H[0].name()}, {"H1", b.H[1].name()},
                   {"H2", b.H[2].name()}, {"H3", b.H[3].name()},
                   {"H4", b.H[4].name()}, {"euler", b.euler}};
  json rows = json::array();
  for (const auto& r : s.rows)
    rows.push_back({to_long(r[0]), to_long(r[1]), to_long(r[2])});
  json rhs = json::array();
  for (const auto& r : s.rhs_coeff) rhs.push_back(to_long(r));
  cert["system"] = {{"rows", rows},
                    {"rhs_coeff_of_q", rhs},
                    {"determinant", to_long(s.det)}};
  cert["solution"] = {{"x", s.solution[0].get_str() + " q"},
                      {"y", s.solution[1].get_str() + " q"},
                      {"z", s.solution[2].get_str() + " q"}};
  cert["q_candidates"] = qs;
  json forms = json::array();
  std::string model;
  for (long q : qs) {
    auto M = form_at(q);
    FormClass fc = classify_form(M);
    forms.push_back({{"q", q},
                     {"matrix", {{to_long(M[0][0]), to_long(M[0][1])},
                                 {to_long(M[1][0]), to_long(M[1][1])}}},
                     {"rank", fc.rank},
                     {"signature", fc.signature},
                     {"parity", fc.even ? "even" : "odd"},
                     {"model", fc.model}});
    if (model.empty()) model = fc.model;
    else if (model != fc.model)
      fail(Err::InconsistentSequence, "q candidates disagree on the model");
  }
  cert["forms"] = forms;
  cert["conclusion"] = model;
  return cert.dump(2);
}

}  // namespace lagtet::topo
