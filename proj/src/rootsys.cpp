#include "subgrowth/rootsys.hpp"

#include "subgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace subgrowth::rootsys {

char family_letter(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    }
    return '?';
}

Family family_from_letter(char c) {
    switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: break;
    }
    throw domain_error(std::string("unknown Lie family '") + c + "': expected one of A,B,C,D,E,F,G");
}

void validate(const LieType& t) {
    const int l = t.rank;
    switch (t.family) {
    case Family::A:
        if (l < 1) throw domain_error("family A requires rank >= 1, got " + std::to_string(l));
        return;
    case Family::B:
        if (l < 2) throw domain_error("family B requires rank >= 2, got " + std::to_string(l));
        return;
    case Family::C:
        if (l < 2) throw domain_error("family C requires rank >= 2, got " + std::to_string(l));
        return;
    case Family::D:
        if (l < 3) throw domain_error("family D requires rank >= 3, got " + std::to_string(l));
        return;
    case Family::E:
        if (l < 6 || l > 8) throw domain_error("family E requires rank in {6,7,8}, got " + std::to_string(l));
        return;
    case Family::F:
        if (l != 4) throw domain_error("family F requires rank = 4, got " + std::to_string(l));
        return;
    case Family::G:
        if (l != 2) throw domain_error("family G requires rank = 2, got " + std::to_string(l));
        return;
    }
    throw domain_error("invalid Lie family");
}

double GammaExact::value() const {
    return (static_cast<double>(a) - static_cast<double>(k) * std::sqrt(static_cast<double>(m))) /
           static_cast<double>(c);
}

std::string GammaExact::to_string() const {
    std::ostringstream os;
    os << "(" << a << " - ";
    if (k != 1) os << k << "*";
    os << "sqrt(" << m << "))/" << c;
    return os.str();
}

namespace {

using Vec = std::vector<int>;

Vec basis(int dim, int i, int coeff) {
    Vec v(dim, 0);
    v[i] = coeff;
    return v;
}

void push_with_negation(std::vector<Vec>& roots, Vec v) {
    Vec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    roots.push_back(std::move(v));
    roots.push_back(std::move(neg));
}

// A_l: e_i - e_j in Z^{l+1}, i != j.
std::vector<Vec> roots_A(int l) {
    std::vector<Vec> roots;
    const int dim = l + 1;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            Vec v(dim, 0);
            v[i] = 1;
            v[j] = -1;
            roots.push_back(std::move(v));
        }
    return roots;
}

// +-e_i +- e_j (i < j), plus the short/long extremes per family.
std::vector<Vec> roots_BCD(int l, Family fam) {
    std::vector<Vec> roots;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    Vec v(l, 0);
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(std::move(v));
                }
    if (fam == Family::B)
        for (int i = 0; i < l; ++i) push_with_negation(roots, basis(l, i, 1));
    if (fam == Family::C)
        for (int i = 0; i < l; ++i) push_with_negation(roots, basis(l, i, 2));
    return roots;
}

// E_6, E_7, E_8 realized inside the E_8 coordinate system (dimension 8),
// all coordinates doubled: integer roots are (+-2, +-2, 0, ...) patterns and
// half-integer roots become (+-1)^8 patterns.
std::vector<Vec> roots_E(int l) {
    std::vector<Vec> roots;
    auto pair_roots = [&](int limit) {
        for (int i = 0; i < limit; ++i)
            for (int j = i + 1; j < limit; ++j)
                for (int si : {2, -2})
                    for (int sj : {2, -2}) {
                        Vec v(8, 0);
                        v[i] = si;
                        v[j] = sj;
                        roots.push_back(std::move(v));
                    }
    };
    auto spinor_roots = [&](int free, const Vec& tail, int parity) {
        // (+-1) in coordinates 0..free-1 with sign-count parity as given,
        // fixed tail in the remaining coordinates; both signs overall.
        for (int mask = 0; mask < (1 << free); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != parity) continue;
            Vec v(8, 0);
            for (int i = 0; i < free; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
            for (int i = free; i < 8; ++i) v[i] = tail[i - free];
            push_with_negation(roots, std::move(v));
        }
    };
    if (l == 8) {
        pair_roots(8);
        // half-sum roots: even number of minus signs, negation pairs them up
        for (int mask = 0; mask < (1 << 8); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
            Vec v(8);
            for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
            roots.push_back(std::move(v));
        }
    } else if (l == 7) {
        pair_roots(6);
        push_with_negation(roots, Vec{0, 0, 0, 0, 0, 0, 2, -2});
        spinor_roots(6, Vec{-1, 1}, 1); // odd sign count in the free block
    } else { // l == 6
        pair_roots(5);
        spinor_roots(5, Vec{-1, -1, 1}, 0); // even sign count in the free block
    }
    return roots;
}

// F_4 with coordinates doubled: +-2e_i, +-2e_i +- 2e_j, (+-1,+-1,+-1,+-1).
std::vector<Vec> roots_F4() {
    std::vector<Vec> roots = roots_BCD(4, Family::D);
    for (auto& v : roots)
        for (auto& c : v) c *= 2;
    for (int i = 0; i < 4; ++i) push_with_negation(roots, basis(4, i, 2));
    for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        roots.push_back(std::move(v));
    }
    return roots;
}

// G_2 in the plane x+y+z = 0 of Z^3.
std::vector<Vec> roots_G2() {
    std::vector<Vec> roots;
    push_with_negation(roots, Vec{1, -1, 0});
    push_with_negation(roots, Vec{0, 1, -1});
    push_with_negation(roots, Vec{1, 0, -1});
    push_with_negation(roots, Vec{2, -1, -1});
    push_with_negation(roots, Vec{-1, 2, -1});
    push_with_negation(roots, Vec{1, 1, -2});
    return roots;
}

// Largest square factor extraction: n = k^2 * m with m squarefree.
void squarefree_split(long long n, long long& k, long long& m) {
    k = 1;
    m = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) k *= p;
        if (e & 1) m *= p;
    }
    m *= n;
}

} // namespace

GammaExact gamma_exact_from_coxeter(long long h) {
    // (sqrt(h(h+2)) - h)^2 / (4h^2) simplifies to (h+1 - sqrt(h(h+2))) / (2h).
    GammaExact g;
    g.a = h + 1;
    g.c = 2 * h;
    squarefree_split(h * (h + 2), g.k, g.m);
    return g;
}

double gamma_from_coxeter(double h) {
    const double s = std::sqrt(h * (h + 2.0)) - h;
    return s * s / (4.0 * h * h);
}

double gamma_from_half_coxeter(double R) {
    const double s = std::sqrt(R * (R + 1.0)) - R;
    return s * s / (4.0 * R * R);
}

RootSystem build_root_system(const LieType& type) {
    validate(type);
    RootSystem rs;
    rs.type = type;
    switch (type.family) {
    case Family::A: rs.roots = roots_A(type.rank); break;
    case Family::B:
    case Family::C:
    case Family::D: rs.roots = roots_BCD(type.rank, type.family); break;
    case Family::E: rs.roots = roots_E(type.rank); break;
    case Family::F: rs.roots = roots_F4(); break;
    case Family::G: rs.roots = roots_G2(); break;
    }
    rs.num_roots = static_cast<long long>(rs.roots.size());
    if (rs.num_roots % type.rank != 0)
        throw std::logic_error("root count is not a multiple of the rank");
    rs.coxeter_number = rs.num_roots / type.rank;
    rs.gamma_exact = gamma_exact_from_coxeter(rs.coxeter_number);
    rs.gamma = gamma_from_coxeter(static_cast<double>(rs.coxeter_number));
    return rs;
}

double gamma_of_type(const LieType& type) {
    return build_root_system(type).gamma;
}

} // namespace subgrowth::rootsys
