#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

// Exact integer certificates identifying the compactified fiber. Everything
// here is integer or rational arithmetic; no floating point.
namespace lagtet::topo {

using Int = mpz_class;
using Rat = mpq_class;

// Finitely generated abelian group in invariant-factor form.
struct AbGroup {
  long rank = 0;
  std::vector<long> torsion;  // factors > 1

  std::string name() const;
};

// Smith normal form U A V = S for small dense integer matrices.
struct Snf {
  std::vector<std::vector<Int>> U, S, V;
  int rank = 0;
};

Snf smith_normal_form(std::vector<std::vector<Int>> A);

// Kernel lattice of the glueing character Z^2 -> Z/3, (n, m) -> n + m.
// Canonical basis rows (2,1), (1,2); solver output and the unimodular
// change of basis certifying they span the same lattice.
struct KernelData {
  std::array<std::array<long, 2>, 2> basis;
  std::array<std::array<long, 2>, 2> computed_basis;
  std::array<std::array<long, 2>, 2> change;  // computed * change = canonical
  long change_det = 0;
  long index = 0;  // index in Z^2
};

KernelData mv_kernel();

// Cohomology of the compactified fiber assembled degree by degree from the
// two-sphere pieces and the quotient collar, with exactness verified.
// InconsistentSequence on any arithmetic mismatch.
struct BettiData {
  std::array<AbGroup, 5> H;
  long euler = 0;
};

BettiData betti_assemble();

// Linear system for the intersection numbers x = Q(v,v), y = Q(w,w),
// z = Q(v,w) in the kernel basis, right side (0, q, -q) symbolic in q.
struct FormSolveData {
  std::array<std::array<Int, 3>, 3> rows;
  std::array<Int, 3> rhs_coeff;  // multiples of q
  Int det;
  std::array<Rat, 3> solution;  // coefficients of q
};

FormSolveData intersection_form_solve();

// Integer q for which the resulting form is integral and unimodular.
std::vector<long> unimodular_q_candidates();

struct FormClass {
  int rank = 0;
  int signature = 0;
  bool even = false;
  bool definite = false;
  std::string model;
};

// Classification of a symmetric unimodular 2x2 integer form by rank,
// signature and parity. NotUnimodular when |det| != 1.
FormClass classify_form(const std::array<std::array<Int, 2>, 2>& M);

// Intersection form matrix at parameter q (entries q/3 scaled); DomainError
// unless 3 | q.
std::array<std::array<Int, 2>, 2> form_at(long q);

// Full certificate chain as deterministic JSON text.
std::string certificate_json();

}  // namespace lagtet::topo
