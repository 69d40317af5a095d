#include "qe2/lattice.hpp"

#include <cmath>
#include <limits>

namespace qe2 {

Margins& Margins::operator+=(const Margins& o) {
    if (o.dim() != dim()) throw std::invalid_argument("Margins: dimension mismatch");
    for (std::size_t k = 0; k < side.size(); ++k) {
        side[k].first += o.side[k].first;
        side[k].second += o.side[k].second;
    }
    return *this;
}

Window::Window(std::vector<std::pair<std::int64_t, std::int64_t>> b) : bounds(std::move(b)) {
    for (auto& [lo, hi] : bounds)
        if (lo > hi) throw std::invalid_argument("Window: lo > hi");
}

Window Window::cube(int d, std::int64_t lo, std::int64_t hi) {
    if (d < 1) throw std::invalid_argument("Window: bad dimension");
    return Window(std::vector<std::pair<std::int64_t, std::int64_t>>(
        static_cast<std::size_t>(d), {lo, hi}));
}

bool Window::contains(const LatticeIndex& x) const {
    if (x.d != dim()) throw std::invalid_argument("Window: dimension mismatch");
    for (int k = 0; k < dim(); ++k)
        if (x[k] < lo(k) || x[k] > hi(k)) return false;
    return true;
}

std::uint64_t Window::point_count() const {
    std::uint64_t n = 1;
    for (int k = 0; k < dim(); ++k) {
        std::uint64_t w = static_cast<std::uint64_t>(hi(k) - lo(k) + 1);
        if (n > std::numeric_limits<std::uint64_t>::max() / w)
            return std::numeric_limits<std::uint64_t>::max();
        n *= w;
    }
    return n;
}

std::optional<Window> Window::interior(const Margins& m) const {
    if (m.dim() != dim()) throw std::invalid_argument("Window::interior: dimension mismatch");
    std::vector<std::pair<std::int64_t, std::int64_t>> b(bounds);
    for (int k = 0; k < dim(); ++k) {
        b[static_cast<std::size_t>(k)].first += m.side[static_cast<std::size_t>(k)].first;
        b[static_cast<std::size_t>(k)].second -= m.side[static_cast<std::size_t>(k)].second;
        if (b[static_cast<std::size_t>(k)].first > b[static_cast<std::size_t>(k)].second)
            return std::nullopt;
    }
    return Window(std::move(b));
}

Window Window::expand(const Margins& m) const {
    if (m.dim() != dim()) throw std::invalid_argument("Window::expand: dimension mismatch");
    std::vector<std::pair<std::int64_t, std::int64_t>> b(bounds);
    for (int k = 0; k < dim(); ++k) {
        b[static_cast<std::size_t>(k)].first -= m.side[static_cast<std::size_t>(k)].first;
        b[static_cast<std::size_t>(k)].second += m.side[static_cast<std::size_t>(k)].second;
    }
    return Window(std::move(b));
}

std::vector<LatticeIndex> Window::enumerate() const {
    std::vector<LatticeIndex> out;
    out.reserve(static_cast<std::size_t>(point_count()));
    LatticeIndex x(dim());
    for (int k = 0; k < dim(); ++k) x[k] = lo(k);
    for (;;) {
        out.push_back(x);
        int k = dim() - 1;
        for (; k >= 0; --k) {
            if (x[k] < hi(k)) {
                ++x[k];
                break;
            }
            x[k] = lo(k);
        }
        if (k < 0) break;
    }
    return out;
}

LatticeIndex Window::sample(std::mt19937_64& rng) const {
    LatticeIndex x(dim());
    for (int k = 0; k < dim(); ++k) {
        // rng() % width is deterministic across platforms, unlike
        // std::uniform_int_distribution.
        std::uint64_t w = static_cast<std::uint64_t>(hi(k) - lo(k) + 1);
        x[k] = lo(k) + static_cast<std::int64_t>(rng() % w);
    }
    return x;
}

void StateVector::add(const LatticeIndex& x, cplx a) {
    if (x.d != d) throw std::invalid_argument("StateVector::add: dimension mismatch");
    amp[x] += a;
}

void StateVector::prune() {
    for (auto it = amp.begin(); it != amp.end();)
        it = (std::abs(it->second) <= kPrune) ? amp.erase(it) : std::next(it);
}

double StateVector::norm() const {
    double s = 0;
    for (auto& [x, a] : amp) s += std::norm(a);
    return std::sqrt(s);
}

StateVector basis_vector(const LatticeIndex& x) {
    StateVector v(x.d);
    v.amp.emplace(x, cplx(1.0, 0.0));
    return v;
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.d != b.d) throw std::invalid_argument("inner: dimension mismatch");
    const StateVector& small = a.amp.size() <= b.amp.size() ? a : b;
    const StateVector& big = a.amp.size() <= b.amp.size() ? b : a;
    cplx s = 0;
    for (auto& [x, v] : small.amp) {
        auto it = big.amp.find(x);
        if (it == big.amp.end()) continue;
        cplx av = (&small == &a) ? v : it->second;
        cplx bv = (&small == &a) ? it->second : v;
        s += std::conj(av) * bv;
    }
    return s;
}

double diff_norm(const StateVector& a, const StateVector& b) {
    if (a.d != b.d) throw std::invalid_argument("diff_norm: dimension mismatch");
    double s = 0;
    for (auto& [x, v] : a.amp) {
        auto it = b.amp.find(x);
        s += std::norm(it == b.amp.end() ? v : v - it->second);
    }
    for (auto& [x, v] : b.amp)
        if (a.amp.find(x) == a.amp.end()) s += std::norm(v);
    return std::sqrt(s);
}

StateVector axpy(const StateVector& a, cplx lambda, const StateVector& b) {
    if (a.d != b.d) throw std::invalid_argument("axpy: dimension mismatch");
    StateVector r = a;
    for (auto& [x, v] : b.amp) r.amp[x] += lambda * v;
    r.prune();
    return r;
}

}  // namespace qe2
