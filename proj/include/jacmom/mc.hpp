#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace jacmom {

// Philox4x32-10 counter-based generator.  A (key, counter) pair maps to four
// 32-bit words; distinct counters give independent outputs, so parallel
// streams are exact replicas regardless of thread scheduling.
class Philox4x32 {
public:
    Philox4x32(std::uint64_t seed, std::uint64_t stream)
        : k0_(static_cast<std::uint32_t>(seed)),
          k1_(static_cast<std::uint32_t>(seed >> 32)),
          c2_(static_cast<std::uint32_t>(stream)),
          c3_(static_cast<std::uint32_t>(stream >> 32)) {}

    // Four words for counter value `idx` within this stream.
    void block(std::uint64_t idx, std::uint32_t out[4]) const {
        std::uint32_t c0 = static_cast<std::uint32_t>(idx);
        std::uint32_t c1 = static_cast<std::uint32_t>(idx >> 32);
        std::uint32_t c2 = c2_, c3 = c3_;
        std::uint32_t k0 = k0_, k1 = k1_;
        for (int round = 0; round < 10; ++round) {
            std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
            std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
            std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            std::uint32_t n0 = hi1 ^ c1 ^ k0;
            std::uint32_t n1 = lo1;
            std::uint32_t n2 = hi0 ^ c3 ^ k1;
            std::uint32_t n3 = lo0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        out[0] = c0; out[1] = c1; out[2] = c2; out[3] = c3;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::uint32_t k0_, k1_, c2_, c3_;
};

// Standard normals from a Philox stream via Box-Muller; each counter block
// yields two variates, consumed in order.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

    double next() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        std::uint32_t w[4];
        gen_.block(idx_++, w);
        double u1 = to_unit(w[0], w[1]);
        double u2 = to_unit(w[2], w[3]);
        constexpr double two_pi = 6.283185307179586476925286766559;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = two_pi * u2;
        spare_ = r * std::sin(a);
        have_ = true;
        return r * std::cos(a);
    }

private:
    static double to_unit(std::uint32_t lo, std::uint32_t hi) {
        std::uint64_t v = (static_cast<std::uint64_t>(hi) << 32) | lo;
        double u = static_cast<double>(v >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

    Philox4x32 gen_;
    std::uint64_t idx_ = 0;
    double spare_ = 0.0;
    bool have_ = false;
};

struct MCConfig {
    long d = 0;
    long m = 0;
    long p = 0;
    double t = 0.0;
    long steps = 1;
    long samples = 1;
    std::uint64_t seed = 0;
    long streams = 4;
    double time_scale = 0.0;  // 0 means 1/d

    void validate() const {
        if (d < 1) throw std::invalid_argument("mc: d must be positive");
        if (m < 1 || m > p || p > d) throw std::invalid_argument("mc: need 1 <= m <= p <= d");
        if (t < 0) throw std::invalid_argument("mc: t must be nonnegative");
        if (steps < 1) throw std::invalid_argument("mc: steps must be positive");
        if (samples < 1) throw std::invalid_argument("mc: samples must be positive");
        if (streams < 1) throw std::invalid_argument("mc: streams must be positive");
        if (time_scale < 0) throw std::invalid_argument("mc: time_scale must be nonnegative");
    }

    double effective_time() const { return t * (time_scale > 0 ? time_scale : 1.0 / d); }
};

struct MCMomentStat {
    double mean = 0.0;
    double stderr_ = 0.0;
};

struct MCResult {
    std::vector<MCMomentStat> moments;  // index n-1
    long samples_used = 0;
    double wall_seconds = 0.0;
};

// Brownian motion on U(d) run to total time t_effective in `steps`
// multiplicative increments exp(i sqrt(dt) H) with H GUE-distributed
// (E|H_ab|^2 = 1); each factor is exactly unitary and the Itô drift
// -(d/2) U dt emerges from the second-order term of the exponential.
inline Eigen::MatrixXcd simulate_unitary_bm(long d, double t_effective, long steps,
                                            GaussianStream& g) {
    using Mat = Eigen::MatrixXcd;
    if (t_effective == 0.0) return Mat::Identity(d, d);
    const double dt = t_effective / static_cast<double>(steps);
    const double sdt = std::sqrt(dt);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Mat U = Mat::Identity(d, d);
    Mat H(d, d);
    Eigen::SelfAdjointEigenSolver<Mat> es;
    for (long s = 0; s < steps; ++s) {
        for (long a = 0; a < d; ++a) {
            H(a, a) = std::complex<double>(g.next(), 0.0);
            for (long b = a + 1; b < d; ++b) {
                double re = g.next() * inv_sqrt2;
                double im = g.next() * inv_sqrt2;
                H(a, b) = std::complex<double>(re, im);
                H(b, a) = std::complex<double>(re, -im);
            }
        }
        es.compute(H);
        Eigen::VectorXcd phase(d);
        for (long i = 0; i < d; ++i) {
            double x = sdt * es.eigenvalues()(i);
            phase(i) = std::complex<double>(std::cos(x), std::sin(x));
        }
        U = es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint() * U;
    }
    return U;
}

// Sample means and standard errors of tr(J^n)/m, n = 1..n_max, where J is
// the squared m x p corner of the simulated unitary.  Samples are assigned
// to logical streams round-robin; per-stream accumulators merge in stream
// order, so results are bit-identical for a fixed (seed, streams) whatever
// the thread count.
inline MCResult estimate_moments(const MCConfig& cfg, long n_max,
                                 unsigned threads = std::thread::hardware_concurrency()) {
    cfg.validate();
    if (n_max < 1) throw std::invalid_argument("mc: n_max must be positive");
    auto t0 = std::chrono::steady_clock::now();

    struct Acc {
        std::vector<double> sum, sumsq;
    };
    std::vector<Acc> acc(cfg.streams);
    for (auto& a : acc) {
        a.sum.assign(n_max, 0.0);
        a.sumsq.assign(n_max, 0.0);
    }

    auto run_stream = [&](long si) {
        GaussianStream g(cfg.seed, static_cast<std::uint64_t>(si));
        Eigen::MatrixXcd J, Jp;
        for (long sample = si; sample < cfg.samples; sample += cfg.streams) {
            Eigen::MatrixXcd U = simulate_unitary_bm(cfg.d, cfg.effective_time(), cfg.steps, g);
            Eigen::MatrixXcd Y = U.topLeftCorner(cfg.m, cfg.p);
            J = Y * Y.adjoint();
            Jp = J;
            for (long n = 1; n <= n_max; ++n) {
                if (n > 1) Jp = Jp * J;
                double v = Jp.trace().real() / static_cast<double>(cfg.m);
                acc[si].sum[n - 1] += v;
                acc[si].sumsq[n - 1] += v * v;
            }
        }
    };

    unsigned pool_size = std::min<unsigned>(threads ? threads : 1, cfg.streams);
    if (pool_size <= 1) {
        for (long si = 0; si < cfg.streams; ++si) run_stream(si);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(pool_size);
        for (unsigned i = 0; i < pool_size; ++i)
            pool.emplace_back([&] {
                for (long si = next.fetch_add(1); si < cfg.streams; si = next.fetch_add(1))
                    run_stream(si);
            });
        for (auto& th : pool) th.join();
    }

    MCResult res;
    res.samples_used = cfg.samples;
    res.moments.resize(n_max);
    const double N = static_cast<double>(cfg.samples);
    for (long n = 0; n < n_max; ++n) {
        double sum = 0.0, sumsq = 0.0;
        for (long si = 0; si < cfg.streams; ++si) {
            sum += acc[si].sum[n];
            sumsq += acc[si].sumsq[n];
        }
        double mean = sum / N;
        double var = N > 1 ? (sumsq - sum * sum / N) / (N - 1) : 0.0;
        if (var < 0) var = 0;
        res.moments[n].mean = mean;
        res.moments[n].stderr_ = std::sqrt(var / N);
    }
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace jacmom
