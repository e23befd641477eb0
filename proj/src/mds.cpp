#include "knowmap/mds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace knowmap {

namespace {

constexpr double kEigenFloor = 1e-12;

using Matrix = std::vector<std::vector<double>>;

// y = M x
void matvec(const Matrix& m, const std::vector<double>& x, std::vector<double>& y) {
    const size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        double acc = 0;
        const auto& row = m[i];
        for (size_t j = 0; j < n; ++j)
            acc += row[j] * x[j];
        y[i] = acc;
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0;
    for (size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

// Modified Gram-Schmidt on two columns, with reorthogonalization when the
// second column nearly cancels ("twice is enough"). A genuinely
// rank-deficient second column is replaced by a deterministic fallback basis
// vector; its Rayleigh quotient then comes out ~0 and the axis is clamped
// downstream.
void orthonormalize(std::vector<double>& v1, std::vector<double>& v2) {
    const size_t n = v1.size();
    const auto project_out = [&](std::vector<double>& v) {
        const double proj = dot(v1, v);
        for (size_t i = 0; i < n; ++i)
            v[i] -= proj * v1[i];
    };
    const auto fallback2 = [&] {
        for (size_t k = 0; k < n; ++k) {
            std::fill(v2.begin(), v2.end(), 0.0);
            v2[k] = 1.0;
            project_out(v2);
            project_out(v2);
            const double norm = std::sqrt(dot(v2, v2));
            if (norm > 1e-6) {
                for (auto& x : v2)
                    x /= norm;
                return;
            }
        }
    };

    const double n1 = std::sqrt(dot(v1, v1));
    if (n1 < 1e-300) {
        std::fill(v1.begin(), v1.end(), 0.0);
        v1[0] = 1.0;
    } else {
        for (auto& x : v1)
            x /= n1;
    }

    const double before = std::sqrt(dot(v2, v2));
    project_out(v2);
    double n2 = std::sqrt(dot(v2, v2));
    if (n2 < 0.7 * before) { // heavy cancellation: polish the remainder
        project_out(v2);
        n2 = std::sqrt(dot(v2, v2));
    }
    if (n2 <= 1e-10 * std::max(before, 1e-300)) {
        fallback2();
    } else {
        for (auto& x : v2)
            x /= n2;
    }
}

} // namespace

MdsResult classical_mds(const Matrix& dissimilarity) {
    MdsResult result;
    const size_t n = dissimilarity.size();
    result.coords.assign(n, {0.0, 0.0});
    if (n < 2)
        return result;

    // Gram matrix B = -1/2 J D^2 J via the centering identity.
    Matrix b(n, std::vector<double>(n, 0.0));
    std::vector<double> row_mean(n, 0.0);
    double grand = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const double d2 = dissimilarity[i][j] * dissimilarity[i][j];
            row_mean[i] += d2;
            grand += d2;
        }
        row_mean[i] /= static_cast<double>(n);
    }
    grand /= static_cast<double>(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const double d2 = dissimilarity[i][j] * dissimilarity[i][j];
            b[i][j] = -0.5 * (d2 - row_mean[i] - row_mean[j] + grand);
        }

    // Gershgorin bound on |lambda|, used only as the residual scale. The
    // iteration itself runs unshifted: for embeddable (PSD) inputs the null
    // space dies in one multiplication, so tiny-but-positive second
    // eigenvalues still converge to machine precision instead of stalling
    // behind a large shift.
    double sigma = 0;
    for (size_t i = 0; i < n; ++i) {
        double radius = 0;
        for (size_t j = 0; j < n; ++j)
            radius += std::abs(b[i][j]);
        sigma = std::max(sigma, radius);
    }
    if (sigma < 1e-300) { // all points coincide
        result.degenerate = true;
        return result;
    }

    // Fixed seeded start: deterministic on every platform.
    std::mt19937_64 rng(0x6d647332ULL);
    const auto unit = [&rng] {
        return (static_cast<double>(rng() >> 11) / 9007199254740992.0) - 0.5;
    };
    std::vector<double> v1(n), v2(n);
    for (size_t i = 0; i < n; ++i) {
        v1[i] = unit();
        v2[i] = unit();
    }
    orthonormalize(v1, v2);

    // Small problems get a deep iteration budget (oracle-grade precision);
    // large layout graphs settle for visualization-grade convergence.
    const int max_iters = n <= 64 ? 20000 : 500;
    std::vector<double> w1(n), w2(n);
    for (int iter = 0; iter < max_iters; ++iter) {
        matvec(b, v1, w1);
        matvec(b, v2, w2);
        orthonormalize(w1, w2);
        // subspace convergence: residual of B restricted to span{w}
        matvec(b, w1, v1);
        matvec(b, w2, v2);
        const double r11 = dot(w1, v1), r12 = dot(w1, v2), r22 = dot(w2, v2);
        double resid = 0;
        for (size_t i = 0; i < n; ++i) {
            const double e1 = v1[i] - (r11 * w1[i] + r12 * w2[i]);
            const double e2 = v2[i] - (r12 * w1[i] + r22 * w2[i]);
            resid += e1 * e1 + e2 * e2;
        }
        v1 = w1;
        v2 = w2;
        if (std::sqrt(resid) <= 1e-13 * sigma)
            break;
    }

    // Rayleigh-Ritz on the original B restricted to span{v1, v2}.
    matvec(b, v1, w1);
    matvec(b, v2, w2);
    const double m11 = dot(v1, w1), m12 = dot(v1, w2), m22 = dot(v2, w2);
    const double half_tr = 0.5 * (m11 + m22);
    const double disc = std::sqrt(0.25 * (m11 - m22) * (m11 - m22) + m12 * m12);
    const double lam1 = half_tr + disc;
    const double lam2 = half_tr - disc;

    // eigenvector of the 2x2 block for lam1; the second is its perpendicular
    double c = m12, s = lam1 - m11;
    if (std::abs(lam1 - m22) > std::abs(s)) {
        c = lam1 - m22;
        s = m12;
    }
    const double norm = std::hypot(c, s);
    if (norm > 0) {
        c /= norm;
        s /= norm;
    } else {
        c = 1;
        s = 0;
    }

    std::vector<double> u1(n), u2(n);
    for (size_t i = 0; i < n; ++i) {
        u1[i] = c * v1[i] + s * v2[i];
        u2[i] = -s * v1[i] + c * v2[i];
    }

    const bool ok1 = lam1 > kEigenFloor;
    const bool ok2 = lam2 > kEigenFloor;
    result.degenerate = !ok1 && !ok2;
    const double s1 = ok1 ? std::sqrt(lam1) : 0.0;
    const double s2 = ok2 ? std::sqrt(lam2) : 0.0;
    for (size_t i = 0; i < n; ++i) {
        result.coords[i][0] = s1 * u1[i];
        result.coords[i][1] = s2 * u2[i];
    }

    // Sign convention: the largest-magnitude coordinate of each axis is
    // positive (first index wins magnitude ties).
    for (int axis = 0; axis < 2; ++axis) {
        size_t arg = 0;
        double best = -1;
        for (size_t i = 0; i < n; ++i) {
            const double mag = std::abs(result.coords[i][static_cast<size_t>(axis)]);
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        if (result.coords[arg][static_cast<size_t>(axis)] < 0) {
            for (size_t i = 0; i < n; ++i)
                result.coords[i][static_cast<size_t>(axis)] = -result.coords[i][static_cast<size_t>(axis)];
        }
    }

    // Frobenius residual ||B - X X^T||_F of the rank-2 reconstruction.
    double resid = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const double rec = result.coords[i][0] * result.coords[j][0]
                               + result.coords[i][1] * result.coords[j][1];
            const double diff = b[i][j] - rec;
            resid += diff * diff;
        }
    }
    result.stress = std::sqrt(resid);
    return result;
}

MdsLayout mds_layout(const WeightedGraph& graph) {
    const size_t n = graph.nodes.size();
    MdsLayout layout;
    if (n == 0)
        return layout;
    if (n == 1) {
        layout.points[graph.nodes[0].label] = {0.0, 0.0};
        return layout;
    }

    const double docs = graph.corpus_documents > 0 ? static_cast<double>(graph.corpus_documents) : 1.0;
    Matrix d(n, std::vector<double>(n, 1.0));
    for (size_t i = 0; i < n; ++i)
        d[i][i] = 0.0;
    for (const auto& e : graph.edges) {
        const double occ_a = static_cast<double>(graph.nodes[static_cast<size_t>(e.a)].occurrence);
        const double occ_b = static_cast<double>(graph.nodes[static_cast<size_t>(e.b)].occurrence);
        double assoc = 0;
        if (occ_a > 0 && occ_b > 0)
            assoc = std::clamp(e.weight * docs / (occ_a * occ_b), 0.0, 1.0);
        d[static_cast<size_t>(e.a)][static_cast<size_t>(e.b)] = 1.0 - assoc;
        d[static_cast<size_t>(e.b)][static_cast<size_t>(e.a)] = 1.0 - assoc;
    }

    const MdsResult r = classical_mds(d);
    layout.stress = r.stress;
    layout.degenerate = r.degenerate;
    for (size_t i = 0; i < n; ++i)
        layout.points[graph.nodes[i].label] = r.coords[i];
    return layout;
}

} // namespace knowmap
