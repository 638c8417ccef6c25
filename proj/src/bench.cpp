#include "blockseq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "blockseq/morphism.hpp"
#include "blockseq/window.hpp"

namespace blockseq {

const char* to_string(Generator g) noexcept
{
    switch (g) {
    case Generator::Oracle:
        return "oracle";
    case Generator::Window:
        return "window";
    case Generator::Morphism:
        return "morphism";
    }
    return "?";
}

std::uint64_t checksum(const Word& digits)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Digit d : digits.digits()) {
        h ^= d;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Word run_generator(Generator g, const PatternSpec& spec, std::size_t n_terms)
{
    switch (g) {
    case Generator::Oracle:
        return oracle_prefix(spec, n_terms);
    case Generator::Window:
        return generate(spec, n_terms);
    case Generator::Morphism:
        return expand_fixed_point(build_morphism(spec), n_terms);
    }
    throw Error("unknown generator");
}

std::string format_bench_record(const BenchRecord& r)
{
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "generator=%s m=%u w=%s N=%zu wall_s=%.6f terms_per_s=%.4g checksum=%016llx",
                  to_string(r.generator), r.base, r.pattern.c_str(), r.n_terms, r.wall_seconds,
                  r.terms_per_second, static_cast<unsigned long long>(r.checksum));
    return buf;
}

BenchRecord bench_generator(Generator g, const PatternSpec& spec, std::size_t n_terms,
                            unsigned passes)
{
    using clock = std::chrono::steady_clock;
    passes = std::max(passes, 1u);
    const std::uint64_t sum = checksum(run_generator(g, spec, n_terms));

    std::vector<double> times;
    for (unsigned i = 0; i < passes; ++i) {
        const auto t0 = clock::now();
        Word out = run_generator(g, spec, n_terms);
        const auto t1 = clock::now();
        if (checksum(out) != sum)
            throw Error(std::string(to_string(g)) + " generator is not deterministic");
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    return {g,
            spec.base(),
            spec.pattern().str(),
            n_terms,
            median,
            median > 0 ? static_cast<double>(n_terms) / median : 0.0,
            sum};
}

std::vector<BenchRecord> bench_all(const PatternSpec& spec, std::size_t n_terms, unsigned passes)
{
    std::vector<BenchRecord> out;
    out.push_back(bench_generator(Generator::Oracle, spec, n_terms, passes));
    out.push_back(bench_generator(Generator::Window, spec, n_terms, passes));
    if (spec.modulus_is_prime())
        out.push_back(bench_generator(Generator::Morphism, spec, n_terms, passes));
    return out;
}

} // namespace blockseq
