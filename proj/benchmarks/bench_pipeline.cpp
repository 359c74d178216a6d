// end-to-end pipeline benchmarks: catalog parsing, context construction,
// relation fixpoint, decomposition, and rendering, sized by the largest
// catalog group (order 48, 55 subgroups, 42 projective-line quotients).

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "g2galois/catalog.hpp"
#include "g2galois/decomp.hpp"
#include "g2galois/picard.hpp"
#include "g2galois/report.hpp"

namespace {

std::string data_path(const std::string& file) {
    return std::string(G2GALOIS_DATA_DIR) + "/" + file;
}

const g2galois::CatalogEntry& entry_named(const std::string& name) {
    static const std::vector<g2galois::CatalogEntry> entries =
        g2galois::load_catalog_file(data_path("catalog.txt"));
    for (const g2galois::CatalogEntry& e : entries)
        if (e.name == name) return e;
    throw std::logic_error("no catalog entry " + name);
}

const g2galois::CurveContext& context_named(const std::string& name) {
    static const std::vector<g2galois::CurveContext> contexts =
        g2galois::load_catalog(data_path("catalog.txt"));
    for (const g2galois::CurveContext& c : contexts)
        if (c.name == name) return c;
    throw std::logic_error("no context " + name);
}

const g2galois::PicardLedger& ledger_named(const std::string& name) {
    static const g2galois::PicardLedger gl2f3 =
        g2galois::build_ledger(context_named("GL2F3"));
    static const g2galois::PicardLedger d6 =
        g2galois::build_ledger(context_named("D6"));
    if (name == "GL2F3") return gl2f3;
    if (name == "D6") return d6;
    throw std::logic_error("no prebuilt ledger " + name);
}

void BM_CatalogParse(benchmark::State& state) {
    const std::string path = data_path("catalog.txt");
    for (auto _ : state) {
        auto entries = g2galois::load_catalog_file(path);
        benchmark::DoNotOptimize(entries);
    }
}
BENCHMARK(BM_CatalogParse);

void BM_ContextBuild_D4(benchmark::State& state) {
    const g2galois::CatalogEntry& entry = entry_named("D4");
    for (auto _ : state) {
        auto ctx = g2galois::build_context(entry);
        benchmark::DoNotOptimize(ctx);
    }
}
BENCHMARK(BM_ContextBuild_D4);

void BM_ContextBuild_GL2F3(benchmark::State& state) {
    const g2galois::CatalogEntry& entry = entry_named("GL2F3");
    for (auto _ : state) {
        auto ctx = g2galois::build_context(entry);
        benchmark::DoNotOptimize(ctx);
    }
}
BENCHMARK(BM_ContextBuild_GL2F3);

void BM_CollectRelations_GL2F3(benchmark::State& state) {
    const g2galois::CurveContext& ctx = context_named("GL2F3");
    for (auto _ : state) {
        auto relations = g2galois::collect_relations(ctx);
        benchmark::DoNotOptimize(relations);
    }
}
BENCHMARK(BM_CollectRelations_GL2F3);

void BM_LedgerFixpoint_GL2F3(benchmark::State& state) {
    const g2galois::CurveContext& ctx = context_named("GL2F3");
    const auto relations = g2galois::collect_relations(ctx);
    for (auto _ : state) {
        auto led = g2galois::build_ledger(ctx, relations);
        benchmark::DoNotOptimize(led);
    }
}
BENCHMARK(BM_LedgerFixpoint_GL2F3);

void BM_DecomposeByOrder_GL2F3_6(benchmark::State& state) {
    const g2galois::PicardLedger& led = ledger_named("GL2F3");
    for (auto _ : state) {
        auto report = g2galois::decompose_by_order(led, 6);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_DecomposeByOrder_GL2F3_6);

void BM_FullTable_GL2F3(benchmark::State& state) {
    const g2galois::CurveContext& ctx = context_named("GL2F3");
    const g2galois::PicardLedger& led = ledger_named("GL2F3");
    for (auto _ : state) {
        std::vector<g2galois::DecompositionReport> rows;
        for (int order : g2galois::very_ample_orders(ctx))
            rows.push_back(g2galois::decompose_by_order(led, order));
        auto text = g2galois::render_table(ctx, rows, g2galois::RenderFormat::csv);
        benchmark::DoNotOptimize(text);
    }
}
BENCHMARK(BM_FullTable_GL2F3);

void BM_Zigzag_D6_DerivablePairs(benchmark::State& state) {
    const g2galois::CurveContext& ctx = context_named("D6");
    const g2galois::PicardLedger& led = ledger_named("D6");
    for (auto _ : state) {
        std::size_t steps = 0;
        for (int a = 0; a < ctx.p1_count(); ++a)
            for (int b = 0; b < ctx.p1_count(); ++b)
                if (a != b && led.difference(a, b))
                    steps += led.zigzag(a, b).size();
        benchmark::DoNotOptimize(steps);
    }
}
BENCHMARK(BM_Zigzag_D6_DerivablePairs);

void BM_PairDifferenceAudit_GL2F3(benchmark::State& state) {
    const g2galois::PicardLedger& led = ledger_named("GL2F3");
    for (auto _ : state) {
        auto audit = g2galois::verify_pairwise_differences(led);
        benchmark::DoNotOptimize(audit);
    }
}
BENCHMARK(BM_PairDifferenceAudit_GL2F3);

} // namespace

BENCHMARK_MAIN();
