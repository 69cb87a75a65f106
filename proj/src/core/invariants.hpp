#pragma once

#include <vector>

#include "disks.hpp"
#include "rational.hpp"
#include "shapes.hpp"

namespace cfl {

// Extra headroom added to every minimal-power search; caps are of the form
// base-genus + generator-count + slack, so an overrun signals invalid inputs
// (a non-torsion difference class), not a larger answer.
inline constexpr int kDefaultSlack = 8;

// tau(S, S') = min{ n >= max(g, g') : V^{n-g}[t_{S,z}] = V^{n-g'}[t_{S',z}]
// in HFK^-_{U=0} }, computed in the Alexander-n pieces of the U = 0
// reduction.
int tau(const DiskElement& e1, const DiskElement& e2, int slack = kDefaultSlack);

// Independent route through the sub-quotient shapes I(n) on the ambient
// complex; must agree with tau() (cross-check, exercised by the test suite).
int tau_via_shapes(const DiskElement& e1, const DiskElement& e2, int slack = kDefaultSlack);

struct TauPrime {
	bool minus_infinity = false;
	int value = 0;  // <= 0 when finite
	friend bool operator==(const TauPrime& a, const TauPrime& b) {
		return a.minus_infinity == b.minus_infinity &&
		       (a.minus_infinity || a.value == b.value);
	}
};

// tau'(S,S') = -sup{ m : difference class vanishes in C(K, L(m, tau)) }.
// Vanishing is monotone in m; once it survives past the stabilization cap
// the result is reported as -infinity. m_max <= 0 selects the default cap
// (max U-exponent of the differential times the generator count).
TauPrime tau_prime(const DiskElement& e1, const DiskElement& e2, int slack = kDefaultSlack,
                   int m_max = 0);

// nu = tau if tau' = -infinity, else tau + 1.
int nu(const DiskElement& e1, const DiskElement& e2, int slack = kDefaultSlack);

// V_k(S,S') = min{ n : Uhat^n [V^-g t_{S,z}] = Uhat^n [V^-g t_{S',z}] in
// H_*(A_k^-) }, for surfaces of equal genus g <= k.
int v_k(const DiskElement& e1, const DiskElement& e2, int k, int slack = kDefaultSlack);

// Upsilon_{(S,S')}(t) through the filtration G_s^t spanned by lattice
// monomials with t*j + (2-t)*i >= -s. Strictly interior t only; the
// endpoints t = 0, 2 have degenerate filtrations and are handled at the
// curve level by the slope laws.
Rational upsilon(const DiskElement& e1, const DiskElement& e2, const Rational& t,
                 int slack = kDefaultSlack);

struct UpsilonCurve {
	std::vector<std::pair<Rational, Rational>> samples;  // interior grid points
	std::vector<Rational> breakpoints;                   // slope changes between samples
};

// Samples t = 1/q .. (2q-1)/q. The value at t = 0 is 0 by the slope law;
// t = 2 is not computed by enumeration.
UpsilonCurve upsilon_curve(const DiskElement& e1, const DiskElement& e2, int grid_q,
                           int slack = kDefaultSlack);

// kappa_0(S) = min{ n >= g : V^{n-g}[t_{S,w}] = 0 in HFK^-_{U=0} };
// genus-0 surfaces have kappa_0 = 0 by definition.
int kappa0(const DiskElement& e, int slack = kDefaultSlack);

// kappa(S,S') for equal positive genus; genus 0 is rejected (genus_zero).
int kappa(const DiskElement& e1, const DiskElement& e2, int slack = kDefaultSlack);

// Normalization of a metric filtration: mu~(x,y) = mu(x,y) - min(mu(x,x),
// mu(y,y)). Input must be symmetric, non-negative and ultrametric
// (not_ultrametric otherwise); the output is a pseudometric.
std::vector<std::vector<Rational>> normalize_filtration(
    const std::vector<std::vector<Rational>>& mu);

}  // namespace cfl
