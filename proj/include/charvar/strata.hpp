#pragma once

#include "charvar/laurent.hpp"

#include <string>
#include <vector>

namespace charvar {

enum class Group { SL2, PGL2, GL2 };
enum class Side { Betti, Dolbeault };

struct ModuliSpec {
    Group group;
    Side side;
    int genus;
};

// E-polynomial split into the parts fixed and swapped by the covering
// involution. total() is the E-polynomial of the double cover itself.
struct SplitPoly {
    LaurentPoly plus;
    LaurentPoly minus;
    LaurentPoly total() const { return plus + minus; }
};

// Cohomology dimensions by (real) degree: dims[d] = dim H^d.
struct BettiVector {
    std::vector<long> dims;
    long at(int d) const {
        if (d < 0 || d >= static_cast<int>(dims.size())) return 0;
        return dims[static_cast<size_t>(d)];
    }
};

// A value together with a flag marking genus-degenerate specializations
// (a vanishing 1 - x^0 factor collapses the stratum at low genus; the
// formula stays valid and the value is the zero polynomial).
struct MaybeDegenerate {
    LaurentPoly value;
    bool degenerate = false;
};

// Involution split of E((C*)^{2g}), variable q.
SplitPoly e_torus_split(int g);

// Involution split of E(T*Jac), variables u, v.
SplitPoly e_tstar_jac_split(int g);

// Split of E(Sym^2 X) given e = E(X): plus covers the symmetric part,
// minus the alternating part; plus + minus == e^2.
SplitPoly sym2_split(const LaurentPoly& e);

struct SigmaOmega {
    SplitPoly sigma; // split E-polynomial of the double cover of the singular locus
    LaurentPoly omega; // E-polynomial of the deepest stratum
};

// Singular-locus data for the given moduli spec. The PGL2 spaces share the
// SL2 loci up to torsion counts handled downstream, so PGL2 is rejected
// here.
SigmaOmega e_sigma_omega(const ModuliSpec& spec);

struct IncidenceData {
    LaurentPoly full; // Poincare polynomial in q of the incidence variety
    SplitPoly split;  // involution-invariant and -variant parts
};

IncidenceData incidence_poincare(int g);

// E-polynomial of the isotropic Grassmannian Gr^w(k, 2g), k in {2, 3}.
// Degenerate (zero) for k = 3 at g = 2.
MaybeDegenerate e_grassmannian_iso(int k, int g);

// E-polynomials of the exceptional strata fibres over the deepest stratum,
// i.e. the displayed closed forms divided by E(Omega). d1 and d13 are
// degenerate (zero) at g = 2.
struct ExceptionalData {
    LaurentPoly delta_s;
    LaurentPoly d1;
    LaurentPoly d3;
    LaurentPoly d13;
    LaurentPoly omega_s;
    bool degenerate = false;
};

ExceptionalData e_exceptional(int g);

// Intersection Poincare polynomial (variable t) of an affine cone of
// complex dimension n over a variety with the given Betti numbers:
// primitive cohomology below degree n, zero from n on. Throws
// NegativePrimitiveError if dims[d] - dims[d-2] < 0 for some d < n.
LaurentPoly cone_ih_truncation(const BettiVector& ih_poincare, int n);

// Intersection E-polynomial (variable q) of the slice normal to the
// middle stratum: (1-q^{2g-3})/(1-q).
LaurentPoly ih_normal_slice_sigma(int g);

// Intersection E-polynomial of the slice normal to the deepest stratum:
// (1-q^{2g})/(1-q^2).
LaurentPoly ie_normal_slice_omega(int g);

// Intersection E-polynomial of the blown-up deepest stratum per point of
// the deepest stratum: (1-q^{4g-4})(1-q^{2g})/((1-q)(1-q^2)).
LaurentPoly ie_omega_r(int g);

const char* group_name(Group g);
const char* side_name(Side s);

} // namespace charvar
