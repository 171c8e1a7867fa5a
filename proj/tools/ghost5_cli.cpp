// ghost5 command-line tool: builds U_5 minors, reproduces the corank
// tables, reports classical dimensions and ghost data, and runs the
// verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition
// error.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ghost5/ghost5.hpp"
#include "ghost5/serialize.hpp"

namespace {

using ghost5::json;
using ghost5::Matrix;
using ghost5::Valuation;
using ghost5::WeightComponent;

constexpr const char* kCacheVersion = "ghost5-1";

struct SweepConfig {
    std::vector<int> components{0, 1, 2, 3};
    long k0_min = ghost5::kTableK0Min;
    long k0_max = ghost5::kTableK0Max;
    long n_min = ghost5::kTableNMin;
    long n_max = ghost5::kTableNMax;
    std::string format = "markdown";
    std::string cache_path;
    unsigned jobs = 0;  // 0 = hardware concurrency

    unsigned effective_jobs() const {
        if (jobs > 0) return jobs;
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1;
    }
};

/// One JSON file per (operation, parameters) key; entries carry the cache
/// version and are ignored on mismatch.
class CacheStore {
public:
    explicit CacheStore(std::string dir) : dir_(std::move(dir)) {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }

    bool enabled() const { return !dir_.empty(); }

    std::optional<json> get(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
        if (doc.value("version", "") != kCacheVersion) return std::nullopt;
        if (!doc.contains("value")) return std::nullopt;
        return doc["value"];
    }

    void put(const std::string& key, const json& value) const {
        if (!enabled()) return;
        json doc{{"version", kCacheVersion}, {"value", value}};
        std::ofstream out(path_for(key));
        out << doc.dump() << "\n";
    }

private:
    std::string path_for(const std::string& key) const { return dir_ + "/" + key + ".json"; }

    std::string dir_;
};

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    unsigned n = std::min<std::size_t>(jobs, count);
    workers.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& w : workers) w.join();
}

long cached_corank(const CacheStore& cache, long k, int a, long n) {
    std::string key = "corank__k" + std::to_string(k) + "_a" + std::to_string(a) + "_n" +
                      std::to_string(n);
    if (auto hit = cache.get(key); hit && hit->is_number_integer()) return hit->get<long>();
    long value = ghost5::corank(ghost5::block_minor({k, a}, n));
    cache.put(key, json(value));
    return value;
}

/// Coranks over the sweep grid, cells computed concurrently, assembled in
/// a fixed order: [component][n - n_min][k0 - k0_min].
std::map<int, std::vector<std::vector<long>>> corank_grid(const SweepConfig& cfg,
                                                          const CacheStore& cache) {
    struct Cell {
        int a;
        long k0, n;
    };
    std::vector<Cell> cells;
    for (int a : cfg.components)
        for (long n = cfg.n_min; n <= cfg.n_max; ++n)
            for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0) cells.push_back({a, k0, n});

    std::vector<long> results(cells.size());
    parallel_for(cells.size(), cfg.effective_jobs(), [&](std::size_t i) {
        const Cell& c = cells[i];
        results[i] = cached_corank(cache, ghost5::weight_of(c.k0, c.a), c.a, c.n);
    });

    std::map<int, std::vector<std::vector<long>>> grid;
    for (int a : cfg.components)
        grid[a].assign(cfg.n_max - cfg.n_min + 1, std::vector<long>(cfg.k0_max - cfg.k0_min + 1));
    for (std::size_t i = 0; i < cells.size(); ++i)
        grid[cells[i].a][cells[i].n - cfg.n_min][cells[i].k0 - cfg.k0_min] = results[i];
    return grid;
}

std::string table_caption(int a) {
    return a % 2 == 0 ? "Corank of P_n(4k0+2," + std::to_string(a) + ")"
                      : "Corank of P_n(4k0," + std::to_string(a) + ")";
}

void print_corank_tables(const SweepConfig& cfg,
                         const std::map<int, std::vector<std::vector<long>>>& grid,
                         std::ostream& os) {
    if (cfg.format == "markdown") {
        for (int a : cfg.components) {
            os << "### " << table_caption(a) << "\n\n";
            os << "| n\\k0 |";
            for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0) os << " " << k0 << " |";
            os << "\n|---|";
            for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0) os << "---|";
            os << "\n";
            for (long n = cfg.n_min; n <= cfg.n_max; ++n) {
                os << "| " << n << " |";
                for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0) {
                    long v = grid.at(a)[n - cfg.n_min][k0 - cfg.k0_min];
                    if (v == 0)
                        os << "  |";  // blank cell, as in the published layout
                    else
                        os << " " << v << " |";
                }
                os << "\n";
            }
            os << "\n";
        }
    } else if (cfg.format == "csv") {
        os << "a,k0,k,n,corank\n";
        for (int a : cfg.components)
            for (long n = cfg.n_min; n <= cfg.n_max; ++n)
                for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0)
                    os << a << "," << k0 << "," << ghost5::weight_of(k0, a) << "," << n << ","
                       << grid.at(a)[n - cfg.n_min][k0 - cfg.k0_min] << "\n";
    } else {
        json tables = json::array();
        for (int a : cfg.components) {
            json rows = json::array();
            for (long n = cfg.n_min; n <= cfg.n_max; ++n) {
                json row = json::array();
                for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0)
                    row.push_back(grid.at(a)[n - cfg.n_min][k0 - cfg.k0_min]);
                rows.push_back(std::move(row));
            }
            tables.push_back(json{{"a", a}, {"coranks", std::move(rows)}});
        }
        json doc{{"k0_min", cfg.k0_min},
                 {"k0_max", cfg.k0_max},
                 {"n_min", cfg.n_min},
                 {"n_max", cfg.n_max},
                 {"tables", std::move(tables)}};
        os << doc.dump(2) << "\n";
    }
}

int cmd_matrix(long k, int a, long n, const std::string& format) {
    Matrix m = ghost5::block_minor({k, a}, n);
    if (format == "json") {
        std::cout << ghost5::matrix_to_json(m, k, a, n).dump(2) << "\n";
    } else if (format == "csv") {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::cout << (c ? "," : "") << ghost5::to_string(m(r, c));
            std::cout << "\n";
        }
    } else {
        std::cout << "P_" << n << "(" << k << "," << a << ")\n\n";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::cout << "|";
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::cout << " " << ghost5::to_string(m(r, c)) << " |";
            std::cout << "\n";
        }
    }
    return 0;
}

std::vector<WeightComponent> admissible_components(long k_max) {
    std::vector<WeightComponent> out;
    for (long k = 4; k <= k_max; k += 2) {
        int a0 = (k % 4 == 2) ? 0 : 1;
        out.push_back({k, a0});
        out.push_back({k, a0 + 2});
    }
    return out;
}

int cmd_dims(long k_max, const std::string& format, unsigned jobs) {
    std::vector<long> weights;
    for (long k = 4; k <= k_max; k += 2) weights.push_back(k);
    std::vector<std::array<ghost5::DimensionProfile, 2>> rows(weights.size());
    parallel_for(weights.size(), jobs ? jobs : SweepConfig{}.effective_jobs(),
                 [&](std::size_t i) {
                     long k = weights[i];
                     Matrix basis = ghost5::unit_invariant_basis(k);
                     int a0 = (k % 4 == 2) ? 0 : 1;
                     rows[i][0] = ghost5::dimension_profile({k, a0}, basis);
                     rows[i][1] = ghost5::dimension_profile({k, a0 + 2}, basis);
                 });

    if (format == "json") {
        json arr = json::array();
        for (const auto& pair : rows)
            for (const auto& p : pair) arr.push_back(ghost5::to_json(p));
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "k,a,d_iw,d_unr,d_unr_oracle,agree\n";
        for (const auto& pair : rows)
            for (const auto& p : pair)
                std::cout << p.k << "," << p.a << "," << p.iwahori << "," << p.unramified << ","
                          << p.unramified_oracle << "," << (p.agree() ? "true" : "false") << "\n";
    }
    bool all_agree = true;
    for (const auto& pair : rows)
        for (const auto& p : pair) all_agree = all_agree && p.agree();
    return all_agree ? 0 : 1;
}

int cmd_ghost(long k, int a, long terms, const std::string& format) {
    WeightComponent wc{k, a};
    ghost5::require_admissible(wc);
    if (format == "json") {
        json coeffs = json::array();
        for (long n = 1; n <= terms; ++n) {
            json c = ghost5::to_json(ghost5::ghost_coefficient(n, a));
            c["valuation"] = ghost5::to_json(ghost5::ghost_coeff_valuation(n, wc));
            coeffs.push_back(std::move(c));
        }
        json doc{{"k", k}, {"a", a}, {"terms", terms}, {"coefficients", std::move(coeffs)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n,valuation,support\n";
        for (long n = 1; n <= terms; ++n) {
            ghost5::GhostCoefficient g = ghost5::ghost_coefficient(n, a);
            std::cout << n << "," << ghost5::ghost_coeff_valuation(n, wc).str() << ",";
            for (std::size_t s = 0; s < g.support.size(); ++s)
                std::cout << (s ? ";" : "") << g.support[s].first << ":" << g.support[s].second;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_newton(long k, int a, long terms) {
    ghost5::ConjectureReport r = ghost5::compare_conjecture({k, a}, terms);
    std::cout << ghost5::to_json(r).dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------
// verification suites

bool suite_tables(const SweepConfig& cfg, const CacheStore& cache) {
    SweepConfig grid = cfg;
    grid.k0_min = std::max(grid.k0_min, ghost5::kTableK0Min);
    grid.k0_max = std::min(grid.k0_max, ghost5::kTableK0Max);
    grid.n_min = std::max(grid.n_min, ghost5::kTableNMin);
    grid.n_max = std::min(grid.n_max, ghost5::kTableNMax);
    auto coranks = corank_grid(grid, cache);
    long mismatches = 0, cells = 0;
    for (int a : grid.components)
        for (long n = grid.n_min; n <= grid.n_max; ++n)
            for (long k0 = grid.k0_min; k0 <= grid.k0_max; ++k0) {
                ++cells;
                long got = coranks[a][n - grid.n_min][k0 - grid.k0_min];
                long want = ghost5::corank_reference(a, k0, n);
                if (got != want) {
                    ++mismatches;
                    std::cout << "  mismatch a=" << a << " k0=" << k0 << " n=" << n << ": got "
                              << got << ", reference " << want << "\n";
                }
            }
    std::cout << "tables: " << cells - mismatches << "/" << cells << " cells match";
    for (const ghost5::CorankErratum& e : ghost5::corank_errata())
        if (e.a <= 3 && e.k0 >= grid.k0_min && e.k0 <= grid.k0_max && e.n >= grid.n_min &&
            e.n <= grid.n_max)
            std::cout << " (reference corrects the printed cell a=" << e.a << " k0=" << e.k0
                      << " n=" << e.n << " from " << e.published << " to " << e.computed << ")";
    std::cout << "\n";
    return mismatches == 0;
}

bool suite_theorem(const SweepConfig& cfg, const CacheStore& cache) {
    long failures = 0, cells = 0, exact = 0;
    for (int a : cfg.components)
        for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0)
            for (long n = cfg.n_min; n <= cfg.n_max; ++n) {
                long k = ghost5::weight_of(k0, a);
                long cr = cached_corank(cache, k, a, n);
                long bound = ghost5::ghost_exponent(n, k, a);
                ++cells;
                if (cr == bound) ++exact;
                if (cr < bound) {
                    ++failures;
                    std::cout << "  bound violated at k=" << k << " a=" << a << " n=" << n
                              << ": corank " << cr << " < " << bound << "\n";
                }
            }
    std::cout << "theorem: bound holds on " << cells - failures << "/" << cells
              << " cells; equality on " << exact << "\n";
    return failures == 0;
}

bool suite_corollary(const SweepConfig& cfg, const CacheStore& cache) {
    (void)cache;
    struct Cell {
        int a;
        long k0, n;
    };
    std::vector<Cell> cells;
    for (int a : cfg.components)
        for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0)
            for (long n = cfg.n_min; n <= cfg.n_max; ++n) cells.push_back({a, k0, n});
    std::vector<char> ok(cells.size());
    parallel_for(cells.size(), cfg.effective_jobs(), [&](std::size_t i) {
        const Cell& c = cells[i];
        ok[i] = ghost5::check_corollary({ghost5::weight_of(c.k0, c.a), c.a}, c.n).holds;
    });
    long failures = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!ok[i]) {
            ++failures;
            std::cout << "  divisibility fails at k0=" << cells[i].k0 << " a=" << cells[i].a
                      << " n=" << cells[i].n << "\n";
        }
    std::cout << "corollary: holds on " << cells.size() - failures << "/" << cells.size()
              << " cells\n";
    return failures == 0;
}

bool suite_dims(long k_max, unsigned jobs) {
    std::vector<long> weights;
    for (long k = 4; k <= k_max; k += 2) weights.push_back(k);
    std::vector<char> ok(weights.size(), 1);
    parallel_for(weights.size(), jobs, [&](std::size_t i) {
        long k = weights[i];
        Matrix basis = ghost5::unit_invariant_basis(k);
        int a0 = (k % 4 == 2) ? 0 : 1;
        for (int a : {a0, a0 + 2})
            if (!ghost5::dimension_profile({k, a}, basis).agree()) ok[i] = 0;
    });
    long failures = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (!ok[i]) {
            ++failures;
            std::cout << "  dimension mismatch at k=" << weights[i] << "\n";
        }
    std::cout << "dims: oracle agrees for " << weights.size() - failures << "/" << weights.size()
              << " weights (k <= " << k_max << ")\n";
    return failures == 0;
}

bool suite_oracle(unsigned jobs) {
    std::vector<long> weights;
    for (long k = 4; k <= 42; k += 2) weights.push_back(k);
    std::vector<char> ok(weights.size(), 1);
    parallel_for(weights.size(), jobs, [&](std::size_t i) {
        long k = weights[i];
        Matrix series = ghost5::entry_series_oracle(k, 12, 12);
        for (long r = 0; r <= 12; ++r)
            for (long c = 0; c <= 12; ++c)
                if (ghost5::entry_closed_form(k, r, c) !=
                    series(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
                    ok[i] = 0;
    });
    long failures = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (!ok[i]) {
            ++failures;
            std::cout << "  entry mismatch at k=" << weights[i] << "\n";
        }
    std::cout << "oracle: closed form matches series for " << weights.size() - failures << "/"
              << weights.size() << " weights\n";
    return failures == 0;
}

bool suite_proof_identity(long k_max) {
    long failures = 0, cells = 0;
    for (const WeightComponent& wc : admissible_components(k_max)) {
        ghost5::ProofIdentityReport r = ghost5::check_proof_identity(wc, k_max);
        ++cells;
        if (!r.holds) {
            ++failures;
            std::cout << "  rank bound fails at k=" << wc.k << " a=" << wc.a << ": rank "
                      << r.rank << " > " << r.bound << "\n";
        }
    }
    std::cout << "proof-identity: holds on " << cells - failures << "/" << cells
              << " components (k <= " << k_max << ")\n";
    return failures == 0;
}

bool suite_conjecture_report(const SweepConfig& cfg, long terms) {
    struct Cell {
        int a;
        long k0;
    };
    std::vector<Cell> cells;
    for (int a : cfg.components)
        for (long k0 = cfg.k0_min; k0 <= cfg.k0_max; ++k0) cells.push_back({a, k0});
    std::vector<std::string> lines(cells.size());
    std::vector<char> completed(cells.size(), 0);
    parallel_for(cells.size(), cfg.effective_jobs(), [&](std::size_t i) {
        const Cell& c = cells[i];
        std::ostringstream os;
        try {
            ghost5::ConjectureReport r =
                ghost5::compare_conjecture({ghost5::weight_of(c.k0, c.a), c.a}, terms);
            os << "  k=" << r.k << " a=" << r.a << ": "
               << (r.polygons_equal ? "polygons agree" : "polygons differ") << " (agree_up_to "
               << r.agree_up_to << "/" << r.terms << ")"
               << (r.polygons_equal ? "" : "  [flagged]");
            completed[i] = 1;
        } catch (const std::exception& e) {
            os << "  k=" << ghost5::weight_of(c.k0, c.a) << " a=" << c.a
               << ": incomplete: " << e.what() << "  [flagged]";
        }
        lines[i] = os.str();
    });
    long agreed = 0, done = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::cout << lines[i] << "\n";
        if (completed[i]) ++done;
        if (lines[i].find("[flagged]") == std::string::npos) ++agreed;
    }
    std::cout << "conjecture-report: " << done << "/" << cells.size() << " cells completed, "
              << agreed << " polygon agreements at " << terms << " terms (informational)\n";
    return true;  // reporting only
}

int cmd_verify(const std::string& suite, const SweepConfig& cfg, long dims_k_max,
               long proof_k_max, long conjecture_terms) {
    CacheStore cache(cfg.cache_path);
    bool ok = true;
    auto run = [&](const std::string& name, bool result) {
        std::cout << (result ? "[ok]   " : "[FAIL] ") << name << "\n";
        ok = ok && result;
    };
    bool all = suite == "all";
    if (all || suite == "tables") run("tables", suite_tables(cfg, cache));
    if (all || suite == "theorem") run("theorem", suite_theorem(cfg, cache));
    if (all || suite == "corollary") run("corollary", suite_corollary(cfg, cache));
    if (all || suite == "dims") run("dims", suite_dims(dims_k_max, cfg.effective_jobs()));
    if (all || suite == "oracle") run("oracle", suite_oracle(cfg.effective_jobs()));
    if (all || suite == "proof-identity")
        run("proof-identity", suite_proof_identity(proof_k_max));
    if (all || suite == "conjecture-report")
        run("conjecture-report", suite_conjecture_report(cfg, conjecture_terms));
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact U_5 Hecke matrix, corank tables, classical dimensions and ghost series"};
    app.require_subcommand(1);

    long k = 6, n = 1, terms = 5;
    int a = 0;
    std::string format = "json";
    SweepConfig sweep;
    long dims_k_max = 74, proof_k_max = 50, conjecture_terms = 5;
    std::string suite = "all";

    auto add_sweep_options = [&](CLI::App* cmd) {
        cmd->add_option("--a", sweep.components, "components to include (default all)");
        cmd->add_option("--k0-min", sweep.k0_min, "first table column");
        cmd->add_option("--k0-max", sweep.k0_max, "last table column");
        cmd->add_option("--n-min", sweep.n_min, "first minor size");
        cmd->add_option("--n-max", sweep.n_max, "last minor size");
        cmd->add_option("--jobs", sweep.jobs, "parallel workers (default: hardware)");
        cmd->add_option("--cache", sweep.cache_path, "cache directory")->envname("GHOST5_CACHE");
    };

    CLI::App* matrix = app.add_subcommand("matrix", "print the minor P_n(k,a)");
    matrix->add_option("--k", k, "weight")->required();
    matrix->add_option("--a", a, "component")->required();
    matrix->add_option("--n", n, "minor size")->required();
    matrix->add_option("--format", format, "json|csv|markdown");

    CLI::App* table = app.add_subcommand("corank-table", "corank tables of the minors");
    add_sweep_options(table);
    table->add_option("--format", sweep.format, "markdown|csv|json");

    CLI::App* dims = app.add_subcommand("dims", "classical dimensions with the oracle column");
    dims->add_option("--k-max", dims_k_max, "largest weight");
    dims->add_option("--format", format, "json|csv");
    dims->add_option("--jobs", sweep.jobs, "parallel workers");

    CLI::App* ghost = app.add_subcommand("ghost", "ghost coefficients at a weight");
    ghost->add_option("--k", k, "weight")->required();
    ghost->add_option("--a", a, "component")->required();
    ghost->add_option("--terms", terms, "number of coefficients");
    ghost->add_option("--format", format, "json|csv");

    CLI::App* newton = app.add_subcommand(
        "newton", "Newton polygons of the characteristic and ghost series");
    newton->add_option("--k", k, "weight")->required();
    newton->add_option("--a", a, "component")->required();
    newton->add_option("--terms", terms, "number of coefficients");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "tables|theorem|corollary|dims|oracle|proof-identity|conjecture-report|all");
    add_sweep_options(verify);
    verify->add_option("--k-max", dims_k_max, "weight bound for the dims suite");
    verify->add_option("--proof-k-max", proof_k_max, "weight bound for the proof identity");
    verify->add_option("--terms", conjecture_terms, "terms for the conjecture report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (matrix->parsed()) return cmd_matrix(k, a, n, format == "json" ? "json" : format);
        if (table->parsed()) {
            CacheStore cache(sweep.cache_path);
            auto grid = corank_grid(sweep, cache);
            print_corank_tables(sweep, grid, std::cout);
            return 0;
        }
        if (dims->parsed()) return cmd_dims(dims_k_max, format, sweep.jobs);
        if (ghost->parsed()) return cmd_ghost(k, a, terms, format);
        if (newton->parsed()) return cmd_newton(k, a, terms);
        if (verify->parsed())
            return cmd_verify(suite, sweep, dims_k_max, proof_k_max, conjecture_terms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
