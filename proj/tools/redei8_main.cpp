// redei8: 2-primary class group invariants of imaginary quadratic
// fields Q(sqrt(-p_1...p_t)), plus utilities for quadratic forms over
// F_2. Subcommands: field, scan, classify-form, nullity-set.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redei8/bqf.hpp"
#include "redei8/quadform.hpp"
#include "redei8/redei.hpp"
#include "redei8/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1; // a falsified theorem
constexpr int kExitUsage = 2;

std::int64_t max_delta_bound() {
    if (const char *env = std::getenv("REDEI8_MAX_DELTA")) {
        try {
            std::int64_t v = std::stoll(env);
            if (v > 0)
                return v;
        } catch (const std::exception &) {
        }
        std::cerr << "redei8: ignoring invalid REDEI8_MAX_DELTA\n";
    }
    return redei8::kDefaultMaxAbsDelta;
}

std::vector<std::uint64_t> parse_primes(const std::string &arg) {
    std::vector<std::uint64_t> primes;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size() || tok.empty() || tok[0] == '-')
            throw std::invalid_argument("bad prime token: " + tok);
        primes.push_back(v);
    }
    if (primes.empty())
        throw std::invalid_argument("no primes given");
    return primes;
}

std::string set_to_string(const std::vector<int> &xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

void print_human(const redei8::FieldReport &r) {
    std::cout << "field       : Q(sqrt(" << r.delta << "))\n";
    std::cout << "primes      : ";
    for (std::size_t i = 0; i < r.primes.size(); ++i)
        std::cout << (i ? " * " : "") << r.primes[i];
    std::cout << "\n";
    std::cout << "r2          : " << r.r2 << "\n";
    std::cout << "r4          : " << r.r4 << "\n";
    std::cout << "r8          : " << r.r8 << "\n";
    std::cout << "rho         : " << r.rho << "\n";
    std::cout << "predicted r8: " << set_to_string(r.predicted) << "\n";
    std::cout << "qb diagonal : " << set_to_string(r.qb_diagonal) << "\n";
    std::cout << "b matrix    : ";
    if (r.r4 == 0) {
        std::cout << "(empty)";
    } else {
        for (int i = 0; i < r.r4; ++i) {
            if (i)
                std::cout << " ";
            for (int j = 0; j < r.r4; ++j)
                std::cout << r.b_matrix[i * r.r4 + j];
        }
    }
    std::cout << "\n";
    if (r.oracle) {
        std::cout << "oracle      : h=" << r.oracle->h << " r2=" << r.oracle->r2
                  << " r4=" << r.oracle->r4 << " r8=" << r.oracle->r8 << " 2-part=[";
        for (std::size_t i = 0; i < r.oracle->elementary_divisor_2part.size(); ++i)
            std::cout << (i ? ", " : "") << r.oracle->elementary_divisor_2part[i];
        std::cout << "]\n";
    }
    std::cout << "consistent  : " << (r.consistent ? "yes" : "NO") << "\n";
}

// Accepts either names joined by '+' (X, Y, I, On) or the rows of the
// upper-triangular coefficient matrix joined by ',' or '/'
// (e.g. X is "01,0" and Y is "11,1").
redei8::QuadForm parse_form(const std::string &arg) {
    bool bits_only = !arg.empty() && arg.find_first_not_of("01,/ ") == std::string::npos;
    if (!bits_only) {
        std::stringstream ss(arg);
        std::string tok;
        std::optional<redei8::QuadForm> acc;
        while (std::getline(ss, tok, '+')) {
            while (!tok.empty() && tok.front() == ' ')
                tok.erase(tok.begin());
            while (!tok.empty() && tok.back() == ' ')
                tok.pop_back();
            redei8::QuadForm part;
            if (tok == "X" || tok == "x")
                part = redei8::form_X();
            else if (tok == "Y" || tok == "y")
                part = redei8::form_Y();
            else if (tok == "I" || tok == "i")
                part = redei8::form_I();
            else if ((tok.size() > 1) && (tok[0] == 'O' || tok[0] == 'o'))
                part = redei8::form_O(std::stoi(tok.substr(1)));
            else
                throw std::invalid_argument("unknown form name: " + tok);
            acc = acc ? redei8::direct_sum(*acc, part) : part;
        }
        if (!acc)
            throw std::invalid_argument("empty form expression");
        return *acc;
    }

    std::vector<std::string> rows;
    std::string cur;
    for (char ch : arg) {
        if (ch == ',' || ch == '/') {
            rows.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    rows.push_back(cur);
    int n = static_cast<int>(rows.size());
    redei8::QuadForm q(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n - i)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " must list the " +
                                        std::to_string(n - i) + " coefficients u_ij for j >= i");
        for (int j = i; j < n; ++j)
            q.set_coeff(i, j, rows[i][j - i] == '1');
    }
    return q;
}

const char *type_name(redei8::FormType t) {
    switch (t) {
    case redei8::FormType::type1:
        return "1";
    case redei8::FormType::type2_1:
        return "2.1";
    case redei8::FormType::type2_2:
        return "2.2";
    }
    return "?";
}

int cmd_field(const std::string &primes_arg, bool with_oracle, bool as_json) {
    redei8::FieldSpec f = redei8::FieldSpec::validate(parse_primes(primes_arg), max_delta_bound());
    redei8::FieldReport r = redei8::build_field_report(f, with_oracle);
    if (as_json)
        std::cout << redei8::to_json_line(r) << "\n";
    else
        print_human(r);
    if (!r.consistent) {
        std::cerr << "redei8: INCONSISTENCY at delta = " << r.delta << "\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int cmd_scan(std::int64_t max_abs_delta, const std::string &t_arg, bool with_oracle,
             const std::string &out_path, int jobs) {
    std::int64_t bound = max_delta_bound();
    if (max_abs_delta < 0 || max_abs_delta > bound)
        throw std::invalid_argument("scan: --max-abs-delta outside [0, " + std::to_string(bound) + "]");
    std::optional<int> t_filter;
    if (t_arg != "all") {
        t_filter = std::stoi(t_arg);
        if (*t_filter < 1)
            throw std::invalid_argument("scan: --t must be a positive integer or 'all'");
    }

    std::ofstream file;
    bool to_file = !out_path.empty();
    if (to_file) {
        file.open(out_path);
        if (!file)
            throw std::runtime_error("scan: cannot open " + out_path);
    }
    std::ostream &records = to_file ? static_cast<std::ostream &>(file) : std::cout;
    std::ostream &info = to_file ? std::cout : std::cerr;

    redei8::ScanSummary s = redei8::run_scan(max_abs_delta, t_filter, with_oracle, jobs, records);
    if (to_file && !file)
        throw std::runtime_error("scan: write to " + out_path + " failed");

    info << "fields      : " << s.field_count << "\n";
    for (const auto &[cell, count] : s.r4_r8_cells)
        info << "r4=" << cell.first << " r8=" << cell.second << " : " << count << "\n";
    info << "inconsistent: " << s.inconsistent_deltas.size() << "\n";
    for (std::int64_t d : s.inconsistent_deltas)
        info << "  delta = " << d << "\n";
    return s.inconsistent_deltas.empty() ? kExitOk : kExitInconsistent;
}

int cmd_classify_form(const std::string &form_arg) {
    redei8::QuadForm q = parse_form(form_arg);
    redei8::Classification c = redei8::classify(q);
    std::cout << "n          : " << c.n << "\n";
    std::cout << "rank       : " << c.rank << "\n";
    std::cout << "k          : " << c.k << "\n";
    std::cout << "defect     : " << c.defect << "\n";
    std::cout << "type       : " << type_name(c.type) << "\n";
    std::cout << "arf        : " << (c.arf ? std::to_string(*c.arf) : std::string("undefined")) << "\n";
    std::cout << "rho        : " << c.rho << "\n";
    std::cout << "zero count : " << c.zero_count << "\n";
    std::set<int> pred = redei8::predicted_nullities(q);
    std::cout << "nullities  : " << set_to_string({pred.begin(), pred.end()}) << "\n";
    return kExitOk;
}

int cmd_nullity_set(int rho, int r, bool is_x) {
    std::set<int> s = redei8::nullity_set(rho, r, is_x);
    std::cout << set_to_string({s.begin(), s.end()}) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"2-primary invariants (r2, r4, r8) of class groups of imaginary quadratic fields"};
    app.require_subcommand(1);

    std::string primes_arg;
    bool field_oracle = false, field_json = false;
    CLI::App *field = app.add_subcommand("field", "analyze one field given its primes p1,...,pt");
    field->add_option("primes", primes_arg, "comma-separated primes, the 3 (mod 4) prime last")
        ->required();
    field->add_flag("--oracle", field_oracle, "also compute the class group by brute force");
    field->add_flag("--json", field_json, "emit one JSON object instead of the table");

    std::int64_t scan_max = 0;
    std::string scan_t = "all", scan_out;
    bool scan_oracle = false;
    int scan_jobs = 1;
    CLI::App *scan = app.add_subcommand("scan", "analyze every field with |delta| <= N");
    scan->add_option("--max-abs-delta", scan_max, "upper bound N on |delta|")->required();
    scan->add_option("--t", scan_t, "restrict to fields with exactly t primes, or 'all'");
    scan->add_flag("--oracle", scan_oracle, "run the class-group oracle per field");
    scan->add_option("--out", scan_out, "write JSON lines here instead of stdout");
    scan->add_option("--jobs", scan_jobs, "worker threads (output order is unaffected)");

    std::string form_arg;
    CLI::App *classify_cmd = app.add_subcommand("classify-form", "classify a quadratic form over F_2");
    classify_cmd
        ->add_option("form", form_arg,
                     "name expression (X, Y, I, On joined by '+') or upper-triangular rows "
                     "(e.g. \"01,0\" for X)")
        ->required();

    int rho = 0, rr = 0;
    bool is_x = false;
    CLI::App *nullity = app.add_subcommand("nullity-set", "print S(rho, r)");
    nullity->add_option("rho", rho, "isotropy index")->required();
    nullity->add_option("r", rr, "dimension")->required();
    nullity->add_flag("--x", is_x, "the form is X (rho = 1, r = 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (field->parsed())
            return cmd_field(primes_arg, field_oracle, field_json);
        if (scan->parsed())
            return cmd_scan(scan_max, scan_t, scan_oracle, scan_out, scan_jobs);
        if (classify_cmd->parsed())
            return cmd_classify_form(form_arg);
        if (nullity->parsed())
            return cmd_nullity_set(rho, rr, is_x);
    } catch (const std::invalid_argument &e) {
        std::cerr << "redei8: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "redei8: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "redei8: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "redei8: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUsage;
}
