#include "numdup/oracle.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>
#include <utility>

#include "numdup/classify.hpp"
#include "numdup/duplication.hpp"

namespace numdup {

std::int64_t direct_type(const NumericalSemigroup& t) { return t.type(); }

bool direct_symmetric(const NumericalSemigroup& t) { return t.is_symmetric(); }

bool direct_almost_symmetric(const NumericalSemigroup& t) { return t.is_almost_symmetric(); }

namespace {

template <typename T>
void compare(AgreementReport& report, const char* what, const T& lhs, const T& rhs) {
    if (lhs == rhs) return;
    std::ostringstream os;
    os << what << ": " << lhs << " vs " << rhs;
    report.mismatches.push_back(os.str());
}

}  // namespace

AgreementReport verify_duplication(const NumericalSemigroup& s, const RelativeIdeal& e,
                                   std::int64_t b) {
    AgreementReport report;
    report.base_gens = s.min_generators();
    report.ideal_gens = e.min_generators();
    report.b = b;

    const NumericalSemigroup t = duplicate(s, e, b);

    report.gorenstein_route = is_duplication_gorenstein(s, e);
    report.ag_conditions_route = is_duplication_almost_gorenstein(s, e);
    report.ag_overring_route = overring_route(s, e).almost_gorenstein;
    report.type_route = duplication_type_formula(s, e);
    if (report.ag_conditions_route) report.type_ag_route = duplication_type_ag(s, e);
    report.ci_route = is_duplication_complete_intersection(s, e);

    report.gorenstein_direct = direct_symmetric(t);
    report.ag_direct = direct_almost_symmetric(t);
    report.type_direct = direct_type(t);
    report.ci_direct = is_complete_intersection(t);

    report.canonical_model_ok =
        normalize(duplication_canonical_model(s, e, b)) == normalize(canonical_ideal(t));
    report.frobenius_formula_ok = t.frobenius() == 2 * e.max_gap() + b;

    compare(report, "gorenstein route vs direct", report.gorenstein_route,
            report.gorenstein_direct);
    compare(report, "almost-Gorenstein conditions vs overring route",
            report.ag_conditions_route, report.ag_overring_route);
    compare(report, "almost-Gorenstein conditions vs direct", report.ag_conditions_route,
            report.ag_direct);
    compare(report, "type formula vs direct", report.type_route, report.type_direct);
    if (report.type_ag_route)
        compare(report, "odd-type formula vs type formula", *report.type_ag_route,
                report.type_route);
    compare(report, "complete intersection route vs direct", report.ci_route,
            report.ci_direct);
    if (!report.canonical_model_ok)
        report.mismatches.push_back("canonical model differs from the canonical ideal");
    if (!report.frobenius_formula_ok)
        report.mismatches.push_back("Frobenius of the duplication misses 2*max_gap(E)+b");
    return report;
}

namespace {

struct SweepTask {
    NumericalSemigroup base;
    RelativeIdeal ideal;  // integral
};

struct TaskResult {
    std::vector<AgreementReport> reports;
};

}  // namespace

SweepSummary sweep(const SweepParams& params) {
    if (params.genus_max < 0) throw std::invalid_argument("genus_max must be nonnegative");
    if (params.genus_max > 10)
        throw Error(errc::budget_exceeded,
                    "genus_max " + std::to_string(params.genus_max) + " exceeds the sweep budget of 10");
    if (params.b_count < 1) throw std::invalid_argument("b_count must be positive");

    const auto started = std::chrono::steady_clock::now();

    SweepSummary summary;
    summary.params = params;

    std::vector<SweepTask> tasks;
    enumerate_by_genus(params.genus_max, [&](const NumericalSemigroup& s) {
        ++summary.semigroup_count;
        std::vector<RelativeIdeal> ideals = enumerate_normalized_ideals(s);
        if (params.ideal_limit && static_cast<std::int64_t>(ideals.size()) > *params.ideal_limit)
            ideals.resize(static_cast<std::size_t>(*params.ideal_limit));
        for (RelativeIdeal& ideal : ideals)
            tasks.push_back({s, auto_translate(s, ideal)});
    });
    summary.ideal_count = static_cast<std::int64_t>(tasks.size());

    std::vector<TaskResult> results(tasks.size());
    auto run_task = [&](std::size_t i) {
        const SweepTask& task = tasks[i];
        for (std::int64_t b : valid_b_values(task.base, params.b_count))
            results[i].reports.push_back(verify_duplication(task.base, task.ideal, b));
    };

    const int jobs = std::max(1, params.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) run_task(i);
            });
        for (std::thread& w : workers) w.join();
    }

    for (const TaskResult& result : results)
        for (const AgreementReport& report : result.reports) {
            ++summary.duplication_count;
            ++summary.type_histogram[report.type_direct];
            if (!report.agree()) summary.mismatched.push_back(report);
        }

    summary.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return summary;
}

}  // namespace numdup
