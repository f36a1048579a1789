// Benchmark of the serial reference paths against the OpenMP kernels:
// lattice enumeration, Weyl closure, spectrum enumeration, embedding checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rdt/embedding.hpp"
#include "rdt/lattice.hpp"
#include "rdt/rootdatum.hpp"
#include "rdt/rootsystem.hpp"
#include "rdt/spectrum.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    using clock = std::chrono::steady_clock;
    fn();  // warm up
    auto t0 = clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    using namespace rdt;

    {
        // Dense rank-6 lattice enumeration via a stretched cubic lattice.
        QMatrix gram = QMatrix::identity(6);
        QMatrix basis = QMatrix::identity(6);
        for (std::size_t i = 0; i < 6; ++i) basis(i, i) = Rational(3);
        basis(0, 1) = Rational(1);
        basis(1, 2) = Rational(1);
        Lattice L(gram, basis);
        row("shortest_vectors rank 6",
            time_ms([&] { shortest_vectors(L, Exec::Serial); }, 3),
            time_ms([&] { shortest_vectors(L, Exec::Parallel); }, 3));
    }

    {
        EuclideanRootDatum d = make_standard({Family::B, 5, Rational(1)});
        row("weyl_group B5 (order 3840)",
            time_ms([&] { weyl_group(d.roots, 0, Exec::Serial); }, 1),
            time_ms([&] { weyl_group(d.roots, 0, Exec::Parallel); }, 1));
    }

    {
        DatumType t{Family::A, 5, Rational(1)};
        MultiplicitySet m{0, 0, 0, 4};
        Rational bound(40);
        row("enumerate_spectrum A4-hat",
            time_ms([&] { enumerate_spectrum(t, m, bound, Exec::Serial); }, 3),
            time_ms([&] { enumerate_spectrum(t, m, bound, Exec::Parallel); }, 3));
    }

    {
        EuclideanRootDatum d = make_standard({Family::C, 4, Rational(1)});
        TorusEmbedding e = build_torus_embedding(classify(d));
        row("run_checks C4-hat (256 samples)",
            time_ms([&] { run_checks(e, 256, 1e-9, Exec::Serial); }, 3),
            time_ms([&] { run_checks(e, 256, 1e-9, Exec::Parallel); }, 3));
    }
    return 0;
}
