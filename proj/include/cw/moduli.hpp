#pragma once

#include <string>

#include "cw/superalgebra.hpp"

namespace cw {

/// Parameter-space point: the disc coordinates (a_+', a_+, a_-') plus a free
/// rational a_-. Classification is invariant under positive rescaling, so the
/// normalized-sphere representative is reporting-only.
struct ModuliPoint {
    Rational alpha_plus_prime, alpha_plus, alpha_minus_prime;
    Rational alpha_minus = 1;

    CWParams params() const {
        return {alpha_plus, alpha_minus, alpha_plus_prime, alpha_minus_prime};
    }
};

struct ClassificationRecord {
    ModuliPoint point;
    std::vector<Rational> b_eigenvalues;
    int zero_count = 0;
    bool indecomposable = false;
    bool superalgebra = true;  // the bracket structure exists at every point
    bool susy = false;
    bool susy_restricted = false;  // decomposable reduced path with a smaller K1
    Rational nu = 0;               // dim K1 / 32
    bool flat = false;
    bool k1_reduction_possible = false;
    std::vector<std::string> tags;  // subset of {P0,P1,P2,Q,diag-disc,ellipsoid}
};

ClassificationRecord classify(const ModuliPoint& pt);

struct GridSpec {
    Rational lo[3] = {-1, -1, -1};
    Rational hi[3] = {1, 1, 1};
    long denom[3] = {10, 10, 10};
    Rational alpha_minus = 1;
};

/// Deterministic lexicographic enumeration (a_+', a_+, a_-').
std::vector<ModuliPoint> grid_points(const GridSpec& g);

/// Serial reference and the OpenMP kernel; identical output by construction
/// (records are merged in grid order independent of the worker count).
std::vector<ClassificationRecord> sweep_serial(const std::vector<ModuliPoint>& pts);
std::vector<ClassificationRecord> sweep_parallel(const std::vector<ModuliPoint>& pts,
                                                 int threads = 0);

struct SpecialPoint {
    std::string name;
    ModuliPoint point;
    std::vector<std::string> tags;
    std::string note;
};

/// Rational ray representatives of P0, P1, P2 and a generic flat-family point.
std::vector<SpecialPoint> special_points();

/// N-extended connection data on a lower-dimensional space; the pair acts on
/// S(V) (x) C^N, the bundle rank counts the full S(W) (x) C^N.
struct ExtendedConnection {
    int dim = 0;   // spacetime dimension, 6 or 9
    int n_ext = 0;  // N
    std::vector<Mat> v_gammas;
    Mat cbar, d;           // operators on S(V) (x) C^N
    Mat tensor_factor;     // the gl_N factor used in cbar
    std::vector<Rational> b_diag;
    int odd_dim = 0;   // dim of the odd space K1
    int rank = 0;      // spinor bundle rank
    Rational fraction = 0;
    bool restricted = false;
    bool tensor_square_ok = false;  // T^2 = -1
};

/// cbar = beta X-_{1234} gamma_12 (x) T, d = 0 on the dim-6 space with
/// B = -beta^2 1_4; restricted K1 of fraction 1/2.
ExtendedConnection extended_connection_d6(const Rational& beta);
/// cbar = -alpha gamma_1 (x) 1 + 2 alpha gamma_123 (x) i sigma3,
/// d = (alpha/2) gamma_1 (x) 1 + (alpha/2) gamma_123 (x) i sigma3 on the
/// dim-9 space with B = -4 alpha^2 diag(4, 1_6); fraction 3/4.
ExtendedConnection extended_connection_d9(const Rational& alpha);

}  // namespace cw
