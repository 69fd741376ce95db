#include "redei8/report.hpp"

#include <atomic>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "redei8/bqf.hpp"

namespace redei8 {

OracleSummary oracle_summary(std::int64_t delta) {
    ClassGroupTable table = ClassGroupTable::build(delta);
    std::vector<int> ranks = two_power_ranks(table);
    OracleSummary o;
    o.h = table.order();
    o.r2 = rank_at(ranks, 0);
    o.r4 = rank_at(ranks, 1);
    o.r8 = rank_at(ranks, 2);
    o.elementary_divisor_2part = two_part_elementary_divisors(ranks);
    return o;
}

FieldReport build_field_report(const FieldSpec &f, bool with_oracle) {
    RedeiData rd = four_rank(f);
    EightRankReport er = eight_rank_report(f, rd);

    FieldReport r;
    r.primes = f.primes();
    r.delta = f.delta();
    r.r2 = rd.r2;
    r.r4 = rd.r4;
    r.r8 = er.r8;
    r.rho = er.rho;
    r.predicted.assign(er.predicted.begin(), er.predicted.end());
    for (int i = 0; i < er.r4; ++i)
        r.qb_diagonal.push_back(er.qb.coeff(i, i) ? 1 : 0);
    for (int i = 0; i < er.r4; ++i)
        for (int j = 0; j < er.r4; ++j)
            r.b_matrix.push_back(er.b_matrix.get(i, j) ? 1 : 0);

    if (with_oracle)
        r.oracle = oracle_summary(f.delta());

    bool predicted_ok = er.predicted.count(r.r8) > 0;
    bool oracle_ok = !r.oracle || (r.oracle->r2 == r.r2 && r.oracle->r4 == r.r4 && r.oracle->r8 == r.r8);
    r.consistent = predicted_ok && oracle_ok;
    return r;
}

std::string to_json_line(const FieldReport &r) {
    nlohmann::ordered_json j;
    j["primes"] = r.primes;
    j["delta"] = r.delta;
    j["r2"] = r.r2;
    j["r4"] = r.r4;
    j["r8"] = r.r8;
    j["rho"] = r.rho;
    j["predicted"] = r.predicted;
    j["qb_diagonal"] = r.qb_diagonal;
    j["b_matrix"] = r.b_matrix;
    if (r.oracle) {
        nlohmann::ordered_json o;
        o["h"] = r.oracle->h;
        o["r2"] = r.oracle->r2;
        o["r4"] = r.oracle->r4;
        o["r8"] = r.oracle->r8;
        o["elementary_divisor_2part"] = r.oracle->elementary_divisor_2part;
        j["oracle"] = o;
    }
    j["consistent"] = r.consistent;
    return j.dump();
}

FieldReport field_report_from_json_line(const std::string &line) {
    nlohmann::json j = nlohmann::json::parse(line);
    FieldReport r;
    r.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    r.delta = j.at("delta").get<std::int64_t>();
    r.r2 = j.at("r2").get<int>();
    r.r4 = j.at("r4").get<int>();
    r.r8 = j.at("r8").get<int>();
    r.rho = j.at("rho").get<int>();
    r.predicted = j.at("predicted").get<std::vector<int>>();
    r.qb_diagonal = j.at("qb_diagonal").get<std::vector<int>>();
    r.b_matrix = j.at("b_matrix").get<std::vector<int>>();
    if (j.contains("oracle")) {
        OracleSummary o;
        o.h = j["oracle"].at("h").get<std::uint64_t>();
        o.r2 = j["oracle"].at("r2").get<int>();
        o.r4 = j["oracle"].at("r4").get<int>();
        o.r8 = j["oracle"].at("r8").get<int>();
        o.elementary_divisor_2part =
            j["oracle"].at("elementary_divisor_2part").get<std::vector<std::uint64_t>>();
        r.oracle = o;
    }
    r.consistent = j.at("consistent").get<bool>();
    return r;
}

std::vector<std::vector<std::uint64_t>> enumerate_field_primes(std::int64_t max_abs_delta,
                                                               std::optional<int> t_filter) {
    if (max_abs_delta < 0)
        throw std::invalid_argument("enumerate_field_primes: bound must be nonnegative");
    std::vector<std::vector<std::uint64_t>> out;
    for (std::int64_t n = 3; n <= max_abs_delta; n += 4) {
        std::uint64_t rest = static_cast<std::uint64_t>(n);
        std::vector<std::uint64_t> one_mod4, three_mod4;
        bool squarefree = true;
        for (std::uint64_t p = 3; p * p <= rest && squarefree; p += 2) {
            if (rest % p != 0)
                continue;
            rest /= p;
            if (rest % p == 0) {
                squarefree = false;
                break;
            }
            (p % 4 == 1 ? one_mod4 : three_mod4).push_back(p);
        }
        if (!squarefree)
            continue;
        if (rest > 1)
            (rest % 4 == 1 ? one_mod4 : three_mod4).push_back(rest);
        if (three_mod4.size() != 1)
            continue;
        int t = static_cast<int>(one_mod4.size()) + 1;
        if (t_filter && *t_filter != t)
            continue;
        one_mod4.push_back(three_mod4[0]);
        out.push_back(std::move(one_mod4));
    }
    return out;
}

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int workers = std::min<std::size_t>(jobs, count == 0 ? 1 : count);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (std::thread &th : pool)
        th.join();
}

} // namespace

ScanSummary run_scan(std::int64_t max_abs_delta, std::optional<int> t_filter, bool with_oracle,
                     int jobs, std::ostream &records) {
    std::vector<std::vector<std::uint64_t>> fields = enumerate_field_primes(max_abs_delta, t_filter);

    std::vector<std::string> lines(fields.size());
    std::vector<FieldReport> reports(fields.size());
    parallel_for(fields.size(), jobs, [&](std::size_t i) {
        FieldSpec f = FieldSpec::validate(fields[i], max_abs_delta);
        reports[i] = build_field_report(f, with_oracle);
        lines[i] = to_json_line(reports[i]);
    });

    ScanSummary summary;
    summary.field_count = fields.size();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        records << lines[i] << '\n';
        ++summary.r4_r8_cells[{reports[i].r4, reports[i].r8}];
        if (!reports[i].consistent)
            summary.inconsistent_deltas.push_back(reports[i].delta);
    }
    return summary;
}

} // namespace redei8
