#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace qe2 {

using cplx = std::complex<double>;

// Points of Z^d. Coordinates are conceptually unbounded integers; int64 is the
// working range (indices stay far below 2^40 in every check).
struct LatticeIndex {
    static constexpr int kMaxDim = 12;

    std::array<std::int64_t, kMaxDim> c{};
    int d = 0;

    LatticeIndex() = default;
    explicit LatticeIndex(int dim) : d(dim) {
        if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("LatticeIndex: bad dimension");
    }
    LatticeIndex(std::initializer_list<std::int64_t> coords) {
        if (coords.size() < 1 || coords.size() > kMaxDim)
            throw std::invalid_argument("LatticeIndex: bad dimension");
        d = static_cast<int>(coords.size());
        int k = 0;
        for (auto v : coords) c[static_cast<std::size_t>(k++)] = v;
    }

    std::int64_t operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
    std::int64_t& operator[](int k) { return c[static_cast<std::size_t>(k)]; }

    bool operator==(const LatticeIndex& o) const {
        if (d != o.d) return false;
        for (int k = 0; k < d; ++k)
            if (c[static_cast<std::size_t>(k)] != o.c[static_cast<std::size_t>(k)]) return false;
        return true;
    }
    bool operator!=(const LatticeIndex& o) const { return !(*this == o); }
};

struct LatticeIndexHash {
    std::size_t operator()(const LatticeIndex& x) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int k = 0; k < x.d; ++k) {
            h ^= static_cast<std::uint64_t>(x.c[static_cast<std::size_t>(k)]);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Per-coordinate non-negative shrink/expand amounts, low and high side.
struct Margins {
    std::vector<std::pair<std::int64_t, std::int64_t>> side;  // (lo, hi)

    explicit Margins(int d = 0) : side(static_cast<std::size_t>(d), {0, 0}) {}
    int dim() const { return static_cast<int>(side.size()); }

    Margins& operator+=(const Margins& o);
};

// Rectangular truncation box: closed integer intervals [lo_k, hi_k].
struct Window {
    std::vector<std::pair<std::int64_t, std::int64_t>> bounds;

    Window() = default;
    explicit Window(std::vector<std::pair<std::int64_t, std::int64_t>> b);
    // Cube [lo,hi]^d.
    static Window cube(int d, std::int64_t lo, std::int64_t hi);

    int dim() const { return static_cast<int>(bounds.size()); }
    std::int64_t lo(int k) const { return bounds[static_cast<std::size_t>(k)].first; }
    std::int64_t hi(int k) const { return bounds[static_cast<std::size_t>(k)].second; }

    bool contains(const LatticeIndex& x) const;
    std::uint64_t point_count() const;  // saturating

    // Shrunken window; nullopt is the distinct empty-interior condition.
    std::optional<Window> interior(const Margins& m) const;
    Window expand(const Margins& m) const;

    std::vector<LatticeIndex> enumerate() const;
    LatticeIndex sample(std::mt19937_64& rng) const;
};

// Sparse vector on Z^d. Immutable by convention once built (all mutators are
// construction helpers).
struct StateVector {
    // Prune threshold: only true zeros are dropped, so measured residuals are
    // never polluted by pruning.
    static constexpr double kPrune = 1e-300;

    int d = 0;
    std::unordered_map<LatticeIndex, cplx, LatticeIndexHash> amp;

    StateVector() = default;
    explicit StateVector(int dim) : d(dim) {}

    void add(const LatticeIndex& x, cplx a);
    void prune();
    double norm() const;
    std::size_t support_size() const { return amp.size(); }
};

StateVector basis_vector(const LatticeIndex& x);

// Conjugate-linear in the FIRST argument: <x|y> conjugates x.
cplx inner(const StateVector& a, const StateVector& b);

// ||a - b||_2
double diff_norm(const StateVector& a, const StateVector& b);

StateVector axpy(const StateVector& a, cplx lambda, const StateVector& b);  // a + lambda*b

}  // namespace qe2
