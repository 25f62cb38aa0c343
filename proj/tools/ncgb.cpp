// Batch front end over the C API.
#include "ncgb.h"

#include "CLI11.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCap = 2;

struct Problem {
    std::vector<std::string> vars;
    std::vector<std::string> polys;
    std::vector<int> poly_lines;
    std::string order;  // optional override from the file
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        if (lead) *lead = s.size();
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    if (lead) *lead = b;
    return s.substr(b, e - b + 1);
}

std::string err_at(const std::string& file, int line, std::size_t col, const std::string& msg) {
    std::ostringstream os;
    os << file << ":" << line;
    if (col) os << ":" << col;
    os << ": " << msg;
    return os.str();
}

Problem read_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    Problem p;
    std::string raw;
    int lineno = 0;
    bool have_vars = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::size_t lead = 0;
        const std::string t = trim(line, &lead);
        if (t.empty()) continue;
        if (!have_vars) {
            if (t.rfind("vars:", 0) != 0) throw UsageError(err_at(path, lineno, lead + 1, "expected 'vars:' line"));
            std::string rest = t.substr(5);
            std::size_t pos = 0;
            while (true) {
                const auto gt = rest.find('>', pos);
                std::string name = trim(rest.substr(pos, gt == std::string::npos ? std::string::npos : gt - pos));
                if (name.empty()) throw UsageError(err_at(path, lineno, 0, "empty generator name"));
                p.vars.push_back(name);
                if (gt == std::string::npos) break;
                pos = gt + 1;
            }
            have_vars = true;
            continue;
        }
        if (t.rfind("order:", 0) == 0) {
            p.order = trim(t.substr(6));
            continue;
        }
        p.polys.push_back(line);
        p.poly_lines.push_back(lineno);
    }
    if (!have_vars) throw UsageError(path + ": missing 'vars:' line");
    if (p.polys.empty()) throw UsageError(path + ": no generator polynomials");
    return p;
}

struct Basis {
    ncgb_basis* h = nullptr;
    Basis() = default;
    explicit Basis(ncgb_basis* b) : h(b) {}
    Basis(const Basis&) = delete;
    Basis& operator=(const Basis&) = delete;
    Basis(Basis&& o) noexcept : h(o.h) { o.h = nullptr; }
    Basis& operator=(Basis&& o) noexcept {
        std::swap(h, o.h);
        return *this;
    }
    ~Basis() { ncgb_basis_free(h); }
};

void check(ncgb_status s, const std::string& what) {
    if (s != NCGB_OK) throw UsageError(what + ": " + ncgb_last_error());
}

template <class Getter>
std::string fetch(Getter get) {
    std::size_t need = 0;
    get(nullptr, 0, &need);
    std::string s(need, '\0');
    get(s.data(), s.size(), &need);
    s.resize(need ? need - 1 : 0);
    return s;
}

std::string element(const ncgb_basis* b, std::size_t i) {
    return fetch([&](char* buf, std::size_t cap, std::size_t* need) { ncgb_basis_get(b, i, buf, cap, need); });
}

std::string element_log(const ncgb_basis* b, std::size_t i) {
    return fetch([&](char* buf, std::size_t cap, std::size_t* need) { ncgb_basis_get_log(b, i, buf, cap, need); });
}

ncgb_order parse_order(const std::string& name) {
    ncgb_order o;
    check(ncgb_order_parse(name.c_str(), &o), "--ordering");
    return o;
}

const char* order_abbrev(ncgb_order o) {
    switch (o) {
        case NCGB_DEGLEX: return "deg";
        case NCGB_DEGINVLEX: return "dil";
        default: return "drl";
    }
}

Basis load(const Problem& p, ncgb_order order, const std::string& path) {
    std::vector<const char*> names;
    for (const auto& v : p.vars) names.push_back(v.c_str());
    ncgb_ring* ring = nullptr;
    check(ncgb_ring_new(names.data(), names.size(), order, &ring), path);
    Basis b;
    const ncgb_status s = ncgb_basis_new(ring, &b.h);
    ncgb_ring_free(ring);
    check(s, path);
    for (std::size_t k = 0; k < p.polys.size(); ++k)
        if (ncgb_basis_add(b.h, p.polys[k].c_str()) != NCGB_OK)
            throw UsageError(err_at(path, p.poly_lines[k], ncgb_last_error_column(), ncgb_last_error()));
    return b;
}

void membership_loop(const ncgb_basis* gb) {
    const bool tty = isatty(STDIN_FILENO);
    std::string line;
    while (true) {
        if (tty) std::cout << "poly> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "quit" || t == "exit") break;
        int member = 0;
        std::string rem;
        std::size_t need = 0;
        if (ncgb_reduce(gb, t.c_str(), nullptr, 0, &need, &member) != NCGB_OK) {
            std::cout << "error: " << ncgb_last_error() << "\n";
            continue;
        }
        rem = fetch([&](char* buf, std::size_t cap, std::size_t* n) { ncgb_reduce(gb, t.c_str(), buf, cap, n, &member); });
        if (member)
            std::cout << "member\n";
        else
            std::cout << "non-member, remainder " << rem << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noncommutative Groebner and involutive bases"};
    std::string file, algorithm = "involutive", ordering = "degrevlex", source, divisors = "thin",
                      strategy = "normal", output;
    int division = 1;
    bool no_criterion = false, log = false, membership = false;
    std::size_t max_degree = 20, max_iterations = 100000;
    app.add_option("file", file, "Problem file")->required();
    app.add_option("-a,--algorithm", algorithm, "groebner, involutive, gwalk or iwalk")
        ->check(CLI::IsMember({"groebner", "involutive", "gwalk", "iwalk"}));
    app.add_option("-o,--ordering", ordering, "deglex, deginvlex or degrevlex (walk target)");
    app.add_option("--source", source, "Ordering of the input basis for walks");
    auto* div_opt = app.add_option("--division", division, "Involutive division key 1-12")->check(CLI::Range(1, 12));
    auto* dvs_opt = app.add_option("--divisors", divisors, "thin or thick")->check(CLI::IsMember({"thin", "thick"}));
    app.add_option("--strategy", strategy, "normal or sugar")->check(CLI::IsMember({"normal", "sugar"}));
    app.add_flag("--no-criterion", no_criterion, "Disable the second criterion");
    app.add_option("--max-degree", max_degree, "Lead monomial degree cap");
    app.add_option("--max-iterations", max_iterations, "Iteration cap");
    auto* verbose = app.add_flag("-v,--verbose", "Print the basis and statistics");
    app.add_flag("--log", log, "Write logged representations next to the output");
    app.add_flag("-m,--membership", membership, "Read polynomials from stdin and test ideal membership");
    app.add_option("--output", output, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }
    const auto verbosity = verbose->count();

    try {
        const Problem prob = read_problem(file);
        const bool walk = algorithm == "gwalk" || algorithm == "iwalk";
        const bool involutive = algorithm == "involutive" || algorithm == "iwalk";
        if (!involutive && (div_opt->count() || dvs_opt->count()))
            std::cerr << "warning: --division and --divisors are ignored by " << algorithm << "\n";
        if (walk && source.empty()) source = prob.order;
        if (walk && source.empty()) throw UsageError("walks need --source (or an 'order:' line in the file)");
        if (!walk && !prob.order.empty() && !app.count("--ordering")) ordering = prob.order;

        const ncgb_order target = parse_order(ordering);
        const ncgb_order input_order = walk ? parse_order(source) : target;
        Basis in = load(prob, input_order, file);

        ncgb_options opts;
        ncgb_options_default(&opts);
        opts.strategy = strategy == "sugar" ? NCGB_STRATEGY_SUGAR : NCGB_STRATEGY_NORMAL;
        opts.criterion2 = no_criterion ? 0 : 1;
        opts.division = division;
        opts.thick = divisors == "thick";
        opts.max_degree = max_degree;
        opts.max_iterations = max_iterations;
        opts.logging = log && !walk;
        if (log && walk) std::cerr << "warning: --log is not available for walks\n";

        Basis out;
        ncgb_run_status run = NCGB_RUN_COMPLETE;
        ncgb_stats stats{};
        if (algorithm == "groebner") {
            check(ncgb_groebner(in.h, &opts, &out.h, &run, &stats), "groebner");
        } else if (algorithm == "involutive") {
            check(ncgb_involutive(in.h, &opts, &out.h, &run, &stats), "involutive");
        } else {
            const auto fn = algorithm == "gwalk" ? ncgb_groebner_walk : ncgb_involutive_walk;
            check(fn(in.h, target, &opts, &out.h, &run), algorithm);
            stats.basis_size = ncgb_basis_size(out.h);
        }

        const std::string ext = involutive ? "inv" : "gb";
        fs::path path = output.empty() ? fs::path(file).replace_extension(std::string(order_abbrev(target)) + "." + ext)
                                       : fs::path(output);
        std::ofstream os(path);
        if (!os) throw UsageError("cannot write " + path.string());
        os << "vars: ";
        for (std::size_t k = 0; k < prob.vars.size(); ++k) os << (k ? " > " : "") << prob.vars[k];
        os << "\norder: " << ncgb_order_name(target) << "\n";
        const std::size_t n = ncgb_basis_size(out.h);
        for (std::size_t k = 0; k < n; ++k) os << element(out.h, k) << "\n";
        const char* status = run == NCGB_RUN_COMPLETE      ? "complete"
                             : run == NCGB_RUN_DEGREE_CAP ? "degree_cap_hit"
                                                          : "iteration_cap_hit";
        std::ostringstream st;
        st << "# stats: status " << status << "\n";
        st << "# stats: basis_size " << n << "\n";
        if (algorithm == "groebner") {
            st << "# stats: spolys " << stats.spolys << "\n";
            st << "# stats: criterion_skips " << stats.criterion_skips << "\n";
            st << "# stats: reductions " << stats.reductions << "\n";
        } else if (algorithm == "involutive") {
            st << "# stats: prolongations " << stats.prolongations << "\n";
            st << "# stats: involutive_reductions " << stats.reductions << "\n";
        }
        if (!walk) st << "# stats: time " << stats.seconds << "\n";
        os << st.str();
        os.close();

        if (log && !walk) {
            fs::path lp = path;
            lp += ".log";
            std::ofstream ls(lp);
            for (std::size_t k = 0; k < n; ++k) ls << element(out.h, k) << " = " << element_log(out.h, k) << "\n";
        }

        if (verbosity > 0) {
            for (std::size_t k = 0; k < n; ++k) std::cout << element(out.h, k) << "\n";
            std::cout << st.str();
        }
        std::cerr << "wrote " << path.string() << " (" << n << " polynomials, " << status << ")\n";

        if (run != NCGB_RUN_COMPLETE) {
            if (membership) std::cerr << "membership test skipped: the basis is incomplete\n";
            return kExitCap;
        }

        if (membership) {
            Basis gb, reduced;
            if (algorithm == "groebner" || algorithm == "gwalk") {
                check(ncgb_reduce_basis(out.h, &reduced.h), "reduce");
            } else {
                ncgb_run_status r2 = NCGB_RUN_COMPLETE;
                check(ncgb_groebner(out.h, &opts, &gb.h, &r2, nullptr), "groebner");
                if (r2 != NCGB_RUN_COMPLETE) throw UsageError("could not complete a Groebner basis for membership");
                check(ncgb_reduce_basis(gb.h, &reduced.h), "reduce");
            }
            membership_loop(reduced.h);
        }
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
