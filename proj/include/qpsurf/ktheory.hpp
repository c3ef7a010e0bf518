#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpsurf/quiver.hpp"
#include "qpsurf/rational.hpp"

namespace qpsurf {

struct KError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;

IntMat identity_matrix(int n);
IntMat matmul(const IntMat& a, const IntMat& b);
long long det3x3_or_general(const IntMat& m);  // integer determinant (fraction-free)

// K0 of the category attached to a quiver: basis the simple classes, Euler
// form chi(S_i, S_j) = a_ji - a_ij (antisymmetric).
class K0Lattice {
public:
    static K0Lattice of(const Quiver& q);

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    int index_of(const std::string& v) const;
    long long chi(int i, int j) const { return chi_[i][j]; }
    const IntMat& chi_matrix() const { return chi_; }

    // [phi_{S_i}^{sign}](x): x -> x - sign * chi(S_i, x) [S_i]
    IntVec twist_class(int i, const IntVec& x, int sign = 1) const;
    IntMat twist_matrix(int i, int sign = 1) const;

    bool preserves_chi(const IntMat& m) const;

private:
    std::vector<std::string> basis_;
    IntMat chi_;
};

struct TwistStep {
    std::string vertex;
    int exp = 1;  // +1 or -1
};

using TwistWordK = std::vector<TwistStep>;

TwistWordK reduce_twist_word(TwistWordK w);

// Word applied left to right (first step first); the matrix acts on column
// vectors of classes.
IntVec apply_word(const K0Lattice& l, const TwistWordK& w, const IntVec& x);
IntMat word_matrix(const K0Lattice& l, const TwistWordK& w);

struct BraidReport {
    std::string relation;  // "braid" | "commute" | "other"
    bool holds = false;
    std::string detail;
};

// a_ij + a_ji = 1 -> check the braid relation; 0 -> check commutation;
// otherwise report the observed status without asserting.
BraidReport braid_relation_check(const Quiver& q, const K0Lattice& l, const std::string& i,
                                 const std::string& j);

// Exact Gaussian-rational central charge per simple class.
struct GaussRat {
    Rat re, im;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
};

// phase in (0,1] <=> Im > 0, or Im = 0 and Re < 0
bool phase_in_upper_window(const GaussRat& z);

struct CentralCharge {
    std::map<std::string, GaussRat> z;  // per simple class

    // mass^2 = |Z|^2, exact
    Rat mass_squared(const std::string& v) const;
    void validate_simple_phases() const;
};

// Z' = Z o word_matrix(w)^{-1} on classes.
CentralCharge twist_charge(const K0Lattice& l, const TwistWordK& w, const CentralCharge& zc);

GaussRat charge_of_class(const K0Lattice& l, const CentralCharge& zc, const IntVec& cls);

}  // namespace qpsurf
