#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subgrowth::rootsys {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c); // throws domain_error on anything outside A..G

/// A simple Lie type: family letter plus rank of the Dynkin diagram.
struct LieType {
    Family family;
    int rank;
};

/// Throws domain_error naming the violated constraint when the rank is not
/// admissible for the family (A: >=1, B/C: >=2, D: >=3, E: 6..8, F: 4, G: 2).
/// D_3 is accepted; it is the A_3 alias and carries the same Coxeter data.
void validate(const LieType& type);

/// gamma in the exact radical form (a - k*sqrt(m))/c with m squarefree.
struct GammaExact {
    long long a = 0;
    long long k = 0;
    long long m = 0;
    long long c = 1;
    double value() const;
    std::string to_string() const; // e.g. "(3 - 2*sqrt(2))/4"
};

struct RootSystem {
    LieType type;
    /// Roots as integer coordinate vectors in the conventional ambient space
    /// of the family. E and F coordinates are stored doubled so half-integer
    /// entries stay integral; counts and negation-closure are unaffected.
    std::vector<std::vector<int>> roots;
    long long num_roots = 0;      // |Phi|
    long long coxeter_number = 0; // h = |Phi| / rank
    GammaExact gamma_exact;
    double gamma = 0.0;

    double half_coxeter() const { return static_cast<double>(coxeter_number) / 2.0; } // R
};

RootSystem build_root_system(const LieType& type);

double gamma_of_type(const LieType& type);

/// The growth constant as a function of the Coxeter number h,
/// (sqrt(h(h+2)) - h)^2 / (4 h^2).
double gamma_from_coxeter(double h);

/// The same constant as a function of R = h/2,
/// (sqrt(R(R+1)) - R)^2 / (4 R^2).
double gamma_from_half_coxeter(double R);

GammaExact gamma_exact_from_coxeter(long long h);

} // namespace subgrowth::rootsys
