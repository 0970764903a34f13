#include "fqmzv/suites.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace fqmzv {

Json GridSpec::to_json() const {
    return Json{{"q", q_list},
                {"max_d", max_d},
                {"min_minus_s", min_minus_s},
                {"max_minus_s", max_minus_s},
                {"min_depth", min_depth},
                {"max_depth", max_depth},
                {"prime_degrees", prime_degrees},
                {"enum_cost_cap", enum_cost_cap},
                {"max_cells", max_cells}};
}

GridSpec GridSpec::from_json(const Json& j) {
    GridSpec g;
    if (j.contains("q")) g.q_list = j.at("q").get<std::vector<std::uint32_t>>();
    if (j.contains("max_d")) g.max_d = j.at("max_d").get<std::size_t>();
    if (j.contains("min_minus_s")) g.min_minus_s = j.at("min_minus_s").get<std::int64_t>();
    if (j.contains("max_minus_s")) g.max_minus_s = j.at("max_minus_s").get<std::int64_t>();
    if (j.contains("min_depth")) g.min_depth = j.at("min_depth").get<std::size_t>();
    if (j.contains("max_depth")) g.max_depth = j.at("max_depth").get<std::size_t>();
    if (j.contains("prime_degrees"))
        g.prime_degrees = j.at("prime_degrees").get<std::vector<std::size_t>>();
    if (j.contains("enum_cost_cap")) g.enum_cost_cap = j.at("enum_cost_cap").get<std::uint64_t>();
    if (j.contains("max_cells")) g.max_cells = j.at("max_cells").get<std::uint64_t>();
    return g;
}

namespace {

std::string tuple_text(const std::vector<std::int64_t>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::int64_t floor_threshold(const FieldParams& fp, std::int64_t s) {
    return vanishing_threshold(-BigInt(s), fp).floor().convert_to<std::int64_t>();
}

bool is_variable_t(const PrimeModulus& v) {
    return v.degree() == 1 && v.poly().coeff(0).is_zero();
}

struct CellOutcome {
    Json record;
    std::vector<CellFailure> failures;
    std::vector<Json> counterexamples;
};

/// Accumulates one cell's record and failures; "ok"/"failures"/"replay" are
/// appended when finished so the record layout is uniform across suites.
class CellCtx {
public:
    CellCtx(std::string key, std::string replay) : key_(std::move(key)), replay_(std::move(replay)) {
        out_.record["cell"] = key_;
    }

    Json& record() { return out_.record; }

    void check(bool ok, const std::string& check_id, const std::string& expected,
               const std::string& actual) {
        if (!ok) out_.failures.push_back({key_, check_id, expected, actual});
    }

    void counterexample(Json j) { out_.counterexamples.push_back(std::move(j)); }

    CellOutcome finish() {
        out_.record["ok"] = out_.failures.empty();
        if (!out_.failures.empty()) {
            Json fails = Json::array();
            for (const auto& f : out_.failures)
                fails.push_back(
                    Json{{"check", f.check}, {"expected", f.expected}, {"actual", f.actual}});
            out_.record["failures"] = fails;
        }
        if (!out_.counterexamples.empty()) {
            out_.record["counterexample"] =
                out_.counterexamples.size() == 1 ? out_.counterexamples[0] : Json(out_.counterexamples);
        }
        out_.record["replay"] = replay_;
        return std::move(out_);
    }

private:
    std::string key_;
    std::string replay_;
    CellOutcome out_;
};

void merge_into(Json& target, const Json& extra) {
    for (auto it = extra.begin(); it != extra.end(); ++it) target[it.key()] = it.value();
}

struct PreparedSuite {
    std::string name;
    std::vector<std::string> keys;
    std::function<CellOutcome(std::size_t)> eval;  // pure; called from worker threads
};

void parallel_ordered(std::size_t n, int jobs, const std::function<CellOutcome(std::size_t)>& work,
                      const std::function<void(std::size_t, CellOutcome&&)>& consume) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) consume(i, work(i));
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::optional<CellOutcome>> slots(n);
    std::vector<char> ready(n, 0);
    std::mutex mutex;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    CellOutcome out = work(i);
                    {
                        std::lock_guard lock(mutex);
                        slots[i] = std::move(out);
                        ready[i] = 1;
                    }
                } catch (...) {
                    std::lock_guard lock(mutex);
                    if (!error) error = std::current_exception();
                    ready[i] = 2;
                }
                cv.notify_all();
            }
        });
    }
    // single writer: consume in grid order
    for (std::size_t i = 0; i < n; ++i) {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return ready[i] != 0; });
        if (ready[i] == 1) {
            CellOutcome out = std::move(*slots[i]);
            slots[i].reset();
            lock.unlock();
            consume(i, std::move(out));
        }
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

SuiteReport run_prepared(PreparedSuite suite, const GridSpec& grid, const RunOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (suite.keys.size() > grid.max_cells)
        throw CostGuardExceeded("suite grid exceeds the max_cells cap");

    SuiteReport report;
    report.suite = suite.name;

    if (opts.emit && opts.emit_header)
        opts.emit(Json{{"suite", suite.name}, {"grid", grid.to_json()}}.dump());

    std::vector<std::size_t> todo;
    todo.reserve(suite.keys.size());
    for (std::size_t i = 0; i < suite.keys.size(); ++i) {
        if (opts.skip_keys.contains(suite.keys[i]))
            ++report.skipped;
        else
            todo.push_back(i);
    }

    parallel_ordered(
        todo.size(), opts.jobs, [&](std::size_t i) { return suite.eval(todo[i]); },
        [&](std::size_t, CellOutcome&& out) {
            ++report.cells;
            for (auto& f : out.failures) report.failures.push_back(std::move(f));
            for (auto& c : out.counterexamples) report.counterexamples.push_back(std::move(c));
            if (opts.emit) opts.emit(out.record.dump());
        });

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

// ---------------------------------------------------------------------------
// batched brute-force oracle: successive powers a^k accumulated over all
// monics of one degree, with per-prime coprimality masks. Independent of the
// index-set formula route it is used to validate.
// ---------------------------------------------------------------------------

struct SweepTable {
    std::vector<Polynomial> untwisted;               // [k]
    std::vector<std::vector<Polynomial>> twisted;    // [prime][k]
};

SweepTable sweep_power_sums(const Field& fp, std::size_t d, std::int64_t kmax,
                            const std::vector<PrimeModulus>& primes) {
    SweepTable table;
    table.untwisted.assign(static_cast<std::size_t>(kmax) + 1, Polynomial(fp));
    table.twisted.assign(primes.size(), table.untwisted);
    std::vector<bool> coprime(primes.size());
    for (const Polynomial& a : MonicRange(fp, d)) {
        for (std::size_t i = 0; i < primes.size(); ++i) coprime[i] = !divides(primes[i].poly(), a);
        Polynomial power = Polynomial::one(fp);
        for (std::int64_t k = 0;; ++k) {
            table.untwisted[static_cast<std::size_t>(k)] += power;
            for (std::size_t i = 0; i < primes.size(); ++i)
                if (coprime[i]) table.twisted[i][static_cast<std::size_t>(k)] += power;
            if (k == kmax) break;
            power = power * a;
        }
    }
    return table;
}

using SweepMap = std::map<std::pair<std::uint32_t, std::size_t>, SweepTable>;

std::vector<std::size_t> usable_degrees(const Field& fp, std::size_t max_d,
                                        std::uint64_t cost_cap) {
    std::vector<std::size_t> out;
    std::uint64_t count = 1;
    for (std::size_t d = 0; d <= max_d; ++d) {
        if (count > cost_cap) break;
        out.push_back(d);
        if (count > cost_cap / fp->q()) break;
        count *= fp->q();
    }
    return out;
}

// ---------------------------------------------------------------------------
// carlitz-sheats: formula == enumeration, vanishing iff d > threshold, and
// greedy maximal-degree uniqueness, per (q, d, s) cell.
// ---------------------------------------------------------------------------

PreparedSuite prepare_carlitz_sheats(const GridSpec& grid) {
    struct Cell {
        Field fp;
        std::size_t d;
        std::int64_t s;
    };
    auto cells = std::make_shared<std::vector<Cell>>();
    auto sweeps = std::make_shared<SweepMap>();

    PreparedSuite suite;
    suite.name = "carlitz-sheats";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        for (std::size_t d : usable_degrees(fp, grid.max_d, grid.enum_cost_cap)) {
            (*sweeps)[{q, d}] = sweep_power_sums(fp, d, grid.max_minus_s, {});
            for (std::int64_t k = grid.min_minus_s; k <= grid.max_minus_s; ++k) {
                cells->push_back({fp, d, -k});
                suite.keys.push_back("q=" + std::to_string(q) + ";d=" + std::to_string(d) +
                                     ";s=" + std::to_string(-k));
            }
        }
    }

    suite.eval = [cells, sweeps, keys = suite.keys](std::size_t i) {
        const Cell& c = (*cells)[i];
        const auto q = c.fp->q();
        CellCtx ctx(keys[i], "powersum --q " + std::to_string(q) + " --d " + std::to_string(c.d) +
                                 " --s " + std::to_string(c.s) + " --method both");
        const BigInt k = -BigInt(c.s);
        const Polynomial& oracle = sweeps->at({q, c.d}).untwisted[static_cast<std::size_t>(-c.s)];
        const Polynomial formula = power_sum_formula(c.fp, c.d, c.s).value;
        ctx.record()["value"] = formula.to_string();
        ctx.record()["threshold"] = vanishing_threshold(k, *c.fp).to_string();

        ctx.check(formula == oracle, "oracle-equivalence",
                  "formula route == enumeration oracle (" + oracle.to_string() + ")",
                  formula.to_string());
        const bool predicted_zero = power_sum_vanishes(*c.fp, c.d, c.s);
        ctx.check(formula.is_zero() == predicted_zero, "vanishing-iff",
                  predicted_zero ? "zero (d > threshold)" : "nonzero (d <= threshold)",
                  formula.is_zero() ? "zero" : "nonzero");

        const auto greedy_exp = max_degree_prediction(*c.fp, c.d, c.s);
        ctx.check(greedy_exp.has_value() == !formula.is_zero(), "greedy-presence",
                  "greedy element exists iff the sum is nonzero",
                  greedy_exp ? "greedy present" : "greedy absent");
        if (!formula.is_zero() && greedy_exp) {
            ctx.check(BigInt(*formula.degree()) == *greedy_exp, "greedy-degree",
                      "degree == greedy exponent " + greedy_exp->str(),
                      std::to_string(*formula.degree()));
            std::size_t attaining = 0;
            enumerate_index_set(c.d, k, *c.fp, IndexKind::U, [&](const IndexTuple& t) {
                if (t.degree_exponent() == *greedy_exp) ++attaining;
                return true;
            });
            ctx.check(attaining == 1, "greedy-uniqueness", "exactly one tuple attains the maximal degree",
                      std::to_string(attaining) + " tuples");
        }
        return ctx.finish();
    };
    return suite;
}

// ---------------------------------------------------------------------------
// twisted-vanishing: identity route == filtered enumeration, the twisted
// vanishing biconditional with its boundary rows, and the v = t index-set
// formula, per (q, d, s, v) cell.
// ---------------------------------------------------------------------------

PreparedSuite prepare_twisted_vanishing(const GridSpec& grid) {
    struct Cell {
        Field fp;
        std::size_t d;
        std::int64_t s;
        PrimeModulus v;
        std::size_t prime_index;
    };
    auto cells = std::make_shared<std::vector<Cell>>();
    auto sweeps = std::make_shared<SweepMap>();

    PreparedSuite suite;
    suite.name = "twisted-vanishing";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        std::vector<PrimeModulus> primes;
        for (auto deg : grid.prime_degrees)
            for (auto& v : primes_of_degree(fp, deg)) primes.push_back(v);
        for (std::size_t d : usable_degrees(fp, grid.max_d, grid.enum_cost_cap)) {
            (*sweeps)[{q, d}] = sweep_power_sums(fp, d, grid.max_minus_s, primes);
            for (std::int64_t k = grid.min_minus_s; k <= grid.max_minus_s; ++k)
                for (std::size_t pi = 0; pi < primes.size(); ++pi) {
                    cells->push_back({fp, d, -k, primes[pi], pi});
                    suite.keys.push_back("q=" + std::to_string(q) + ";d=" + std::to_string(d) +
                                         ";s=" + std::to_string(-k) + ";v=" + primes[pi].to_string());
                }
        }
    }

    suite.eval = [cells, sweeps, keys = suite.keys](std::size_t i) {
        const Cell& c = (*cells)[i];
        const auto q = c.fp->q();
        CellCtx ctx(keys[i], "powersum --q " + std::to_string(q) + " --d " + std::to_string(c.d) +
                                 " --s " + std::to_string(c.s) + " --prime " + c.v.to_string() +
                                 " --method both");
        const Polynomial& oracle =
            sweeps->at({q, c.d}).twisted[c.prime_index][static_cast<std::size_t>(-c.s)];
        const Polynomial twisted = twisted_power_sum(c.fp, c.d, c.s, c.v).value;
        ctx.record()["value"] = twisted.to_string();

        ctx.check(twisted == oracle, "oracle-equivalence",
                  "identity route == filtered enumeration (" + oracle.to_string() + ")",
                  twisted.to_string());

        const bool predicted_zero = twisted_power_sum_vanishes(*c.fp, c.d, c.s, c.v.degree());
        ctx.check(twisted.is_zero() == predicted_zero, "twisted-vanishing-iff",
                  predicted_zero ? "zero (beyond threshold or in the gap)" : "nonzero",
                  twisted.is_zero() ? "zero" : "nonzero");

        if (is_variable_t(c.v) && c.d >= 1) {
            const Polynomial eq2 = twisted_power_sum_formula_t(c.fp, c.d, c.s).value;
            ctx.check(eq2 == twisted, "eq2-route", "twisted index-set formula == identity route",
                      eq2.to_string());
        }

        const std::int64_t floor_l = floor_threshold(*c.fp, c.s);
        Json boundary = Json::array();
        if (c.d == c.v.degree()) boundary.push_back("d-eq-degv");
        if (static_cast<std::int64_t>(c.d) == floor_l + 1) boundary.push_back("d-eq-floor-plus-1");
        if (c.d == 1 && c.v.degree() == 1) boundary.push_back("degv-eq-d-eq-1");
        ctx.record()["boundary"] = boundary;
        return ctx.finish();
    };
    return suite;
}

// ---------------------------------------------------------------------------
// extremal-degrees: the modest element predicts the unique minimal degree of
// the untwisted sum; for v = t the twisted minimum-degree prediction equals
// the t-adic valuation, with uniqueness. One cell per (q, s).
// ---------------------------------------------------------------------------

PreparedSuite prepare_extremal_degrees(const GridSpec& grid) {
    struct Cell {
        Field fp;
        std::int64_t s;
    };
    auto cells = std::make_shared<std::vector<Cell>>();

    PreparedSuite suite;
    suite.name = "extremal-degrees";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        for (std::int64_t k = grid.min_minus_s; k <= grid.max_minus_s; ++k) {
            cells->push_back({fp, -k});
            suite.keys.push_back("q=" + std::to_string(q) + ";s=" + std::to_string(-k));
        }
    }

    suite.eval = [cells, keys = suite.keys, max_d = grid.max_d](std::size_t i) {
        const Cell& c = (*cells)[i];
        const auto q = c.fp->q();
        CellCtx ctx(keys[i], "verify --suite extremal-degrees --q " + std::to_string(q) +
                                 " --min-s " + std::to_string(-c.s) + " --max-s " +
                                 std::to_string(-c.s));
        const BigInt k = -BigInt(c.s);
        const std::int64_t floor_l = floor_threshold(*c.fp, c.s);

        for (std::size_t d = 0; d <= max_d; ++d) {
            const Polynomial sum = power_sum_formula(c.fp, d, c.s).value;
            const auto modest = modest_element(d, k, *c.fp);
            if (sum.is_zero()) {
                ctx.check(!modest.has_value(), "modest-presence",
                          "no modest element for the vanishing sum (d=" + std::to_string(d) + ")",
                          modest ? "modest present" : "modest absent");
                continue;
            }
            const BigInt min_exp = modest->degree_exponent();
            ctx.check(BigInt(*sum.order_at_t()) == min_exp, "modest-degree",
                      "t-order of S_d == modest exponent " + min_exp.str() + " (d=" +
                          std::to_string(d) + ")",
                      std::to_string(*sum.order_at_t()));
            std::size_t attaining = 0;
            enumerate_index_set(d, k, *c.fp, IndexKind::U, [&](const IndexTuple& t) {
                if (t.degree_exponent() == min_exp) ++attaining;
                return true;
            });
            ctx.check(attaining == 1, "modest-uniqueness",
                      "exactly one tuple attains the minimal degree (d=" + std::to_string(d) + ")",
                      std::to_string(attaining) + " tuples");
        }

        PrimeModulus vt(Polynomial::variable(c.fp));
        PowerSumTable table(c.fp, vt);
        for (std::size_t d = 1; d <= static_cast<std::size_t>(floor_l + 1); ++d) {
            const Polynomial& twisted = table.twisted(d, c.s);
            const auto prediction = min_degree_prediction_t(*c.fp, d, c.s);
            ctx.check(prediction.has_value() == !twisted.is_zero(), "twisted-min-presence",
                      "twisted index set nonempty iff twisted sum nonzero (d=" + std::to_string(d) +
                          ")",
                      prediction ? "prediction present" : "prediction absent");
            if (twisted.is_zero() || !prediction) continue;
            ctx.check(BigInt(*twisted.order_at_t()) == *prediction, "twisted-min-degree",
                      "t-valuation == twisted minimum-degree prediction " + prediction->str() +
                          " (d=" + std::to_string(d) + ")",
                      std::to_string(*twisted.order_at_t()));
            std::size_t attaining = 0;
            enumerate_index_set(d, k, *c.fp, IndexKind::UTwisted, [&](const IndexTuple& t) {
                if (t.degree_exponent() == *prediction) ++attaining;
                return true;
            });
            ctx.check(attaining == 1, "twisted-min-uniqueness",
                      "exactly one twisted tuple attains the minimum (d=" + std::to_string(d) + ")",
                      std::to_string(attaining) + " tuples");
        }
        return ctx.finish();
    };
    return suite;
}

// ---------------------------------------------------------------------------
// valuation-chain: nu_{floor+1} > ... > nu_1 >= nu_0 = 0 for every degree-1
// prime, with the equality observation recorded. One cell per (q, v, s).
// ---------------------------------------------------------------------------

PreparedSuite prepare_valuation_chain(const GridSpec& grid) {
    struct Cell {
        Field fp;
        PrimeModulus v;
        std::int64_t s;
    };
    auto cells = std::make_shared<std::vector<Cell>>();

    PreparedSuite suite;
    suite.name = "valuation-chain";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        for (const auto& v : primes_of_degree(fp, 1))
            for (std::int64_t k = grid.min_minus_s; k <= grid.max_minus_s; ++k) {
                cells->push_back({fp, v, -k});
                suite.keys.push_back("q=" + std::to_string(q) + ";v=" + v.to_string() +
                                     ";s=" + std::to_string(-k));
            }
    }

    suite.eval = [cells, keys = suite.keys](std::size_t i) {
        const Cell& c = (*cells)[i];
        const auto q = c.fp->q();
        const std::int64_t top = floor_threshold(*c.fp, c.s) + 1;
        CellCtx ctx(keys[i], "powersum --q " + std::to_string(q) + " --d " + std::to_string(top) +
                                 " --s " + std::to_string(c.s) + " --prime " + c.v.to_string() +
                                 " --method both");
        PowerSumTable table(c.fp, c.v);
        std::vector<Valuation> nus;
        Json nu_json = Json::array();
        for (std::int64_t d = 0; d <= top; ++d) {
            nus.push_back(table.nu(static_cast<std::size_t>(d), c.s));
            nu_json.push_back(valuation_to_json(nus.back()));
        }
        ctx.record()["nu"] = nu_json;

        ctx.check(nus[0] == Valuation::of(0), "nu0-zero", "nu_0 == 0", valuation_to_json(nus[0]).dump());
        for (std::int64_t d = top; d >= 2; --d)
            ctx.check(nus[static_cast<std::size_t>(d)] > nus[static_cast<std::size_t>(d - 1)],
                      "chain-strict", "nu_" + std::to_string(d) + " > nu_" + std::to_string(d - 1),
                      valuation_to_json(nus[static_cast<std::size_t>(d)]).dump() + " vs " +
                          valuation_to_json(nus[static_cast<std::size_t>(d - 1)]).dump());
        for (std::int64_t d = 1; d <= top; ++d)
            ctx.check(nus[static_cast<std::size_t>(d)].is_finite(), "chain-finite",
                      "nu_" + std::to_string(d) + " finite within the chain", "infinite");
        if (top >= 1) {
            ctx.check(nus[1] >= nus[0], "chain-last", "nu_1 >= nu_0", valuation_to_json(nus[1]).dump());
            // observation only: equality at the last step goes with q-evenness
            ctx.record()["nu1_eq_nu0"] = (nus[1] == nus[0]);
            ctx.record()["q_even"] = is_q_even(c.s, *c.fp);
        }
        return ctx.finish();
    };
    return suite;
}

// ---------------------------------------------------------------------------
// main-theorem: over degree-1 primes, zero iff trivial (depth > 1) and zero
// iff q-even (depth 1), with the valuation prediction checked on every cell;
// plus the counterpart checks at infinity. Cells are (q, v-or-infinity, s).
// ---------------------------------------------------------------------------

void for_each_tuple(std::size_t r, std::int64_t kmin, std::int64_t kmax,
                    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> s(r, -kmin);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == r) {
            fn(s);
            return;
        }
        for (std::int64_t k = kmin; k <= kmax; ++k) {
            s[i] = -k;
            rec(i + 1);
        }
    };
    rec(0);
}

PreparedSuite prepare_main_theorem(const GridSpec& grid) {
    struct Cell {
        Field fp;
        std::optional<PrimeModulus> v;  // nullopt = infinity
        std::vector<std::int64_t> s;
    };
    auto cells = std::make_shared<std::vector<Cell>>();

    PreparedSuite suite;
    suite.name = "main-theorem";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        std::vector<std::optional<PrimeModulus>> places;
        places.push_back(std::nullopt);
        for (const auto& v : primes_of_degree(fp, 1)) places.push_back(v);
        for (const auto& place : places)
            for (std::size_t r = grid.min_depth; r <= grid.max_depth; ++r)
                for_each_tuple(r, grid.min_minus_s, grid.max_minus_s,
                               [&](const std::vector<std::int64_t>& s) {
                                   cells->push_back({fp, place, s});
                                   suite.keys.push_back(
                                       "q=" + std::to_string(q) + ";v=" +
                                       (place ? place->to_string() : "inf") + ";s=" + tuple_text(s));
                               });
    }

    suite.eval = [cells, keys = suite.keys](std::size_t i) {
        const Cell& c = (*cells)[i];
        const auto q = c.fp->q();
        std::string replay = "zeta --q " + std::to_string(q);
        if (c.v) replay += " --prime " + c.v->to_string();
        replay += " --tuple " + tuple_text(c.s);
        CellCtx ctx(keys[i], replay);

        MZVIndex idx(c.s);
        const std::size_t r = idx.depth();
        if (!c.v) {
            ZeroReport rep = zeta_at_infinity(c.fp, idx);
            merge_into(ctx.record(), zeta_record(rep, idx));
            if (r == 1) {
                if (c.s[0] < 0) {
                    const bool expect_zero = is_q_even(c.s[0], *c.fp);
                    ctx.check(rep.is_zero == expect_zero, "depth1-biconditional",
                              expect_zero ? "zero (q-even)" : "nonzero (q-odd)",
                              rep.value.to_string());
                } else {
                    ctx.check(!rep.is_zero && rep.value.is_one(), "zeta0-one", "zeta(0) == 1",
                              rep.value.to_string());
                }
            } else {
                const bool trivial = infinity_trivial_witness(*c.fp, idx).has_value();
                ctx.check(rep.is_zero == trivial, "main-biconditional",
                          trivial ? "zero (trivial)" : "nonzero (not trivial)",
                          rep.value.to_string());
            }
        } else {
            ZeroReport rep = zeta_v_adic(c.fp, idx, *c.v);
            merge_into(ctx.record(), zeta_record(rep, idx));
            if (r == 1) {
                const bool expect_zero = is_q_even(c.s[0], *c.fp);
                ctx.check(rep.is_zero == expect_zero, "depth1-biconditional",
                          expect_zero ? "zero (q-even)" : "nonzero (q-odd)", rep.value.to_string());
                if (!rep.is_zero)
                    ctx.check(*rep.nu_predicted == *rep.nu_actual, "valuation-prediction",
                              "valuation == prediction " + valuation_to_json(*rep.nu_predicted).dump(),
                              valuation_to_json(*rep.nu_actual).dump());
            } else {
                const bool trivial = v_adic_trivial_witness(*c.fp, idx, 1).has_value();
                ctx.check(rep.is_zero == trivial, "main-biconditional",
                          trivial ? "zero (trivial)" : "nonzero (not trivial)",
                          rep.value.to_string());
                ctx.check(*rep.nu_predicted == *rep.nu_actual, "valuation-prediction",
                          "valuation == prediction " + valuation_to_json(*rep.nu_predicted).dump(),
                          valuation_to_json(*rep.nu_actual).dump());
                ctx.check(rep.nu_predicted->is_infinite() == trivial, "prediction-infinite-iff-trivial",
                          "prediction infinite iff trivial",
                          valuation_to_json(*rep.nu_predicted).dump());
            }
        }
        return ctx.finish();
    };
    return suite;
}

// ---------------------------------------------------------------------------
// trivial-sufficiency: every tuple with a trivial witness evaluates to zero,
// for primes of every degree in the grid. Cells are (q, v, s).
// ---------------------------------------------------------------------------

PreparedSuite prepare_trivial_sufficiency(const GridSpec& grid) {
    struct Cell {
        Field fp;
        PrimeModulus v;
        std::vector<std::int64_t> s;
    };
    auto cells = std::make_shared<std::vector<Cell>>();

    PreparedSuite suite;
    suite.name = "trivial-sufficiency";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        for (auto deg : grid.prime_degrees)
            for (const auto& v : primes_of_degree(fp, deg))
                for (std::size_t r = std::max<std::size_t>(2, grid.min_depth); r <= grid.max_depth;
                     ++r)
                    for_each_tuple(r, grid.min_minus_s, grid.max_minus_s,
                                   [&](const std::vector<std::int64_t>& s) {
                                       cells->push_back({fp, v, s});
                                       suite.keys.push_back("q=" + std::to_string(q) + ";v=" +
                                                            v.to_string() + ";s=" + tuple_text(s));
                                   });
    }

    suite.eval = [cells, keys = suite.keys](std::size_t i) {
        const Cell& c = (*cells)[i];
        CellCtx ctx(keys[i], "zeta --q " + std::to_string(c.fp->q()) + " --prime " +
                                 c.v.to_string() + " --tuple " + tuple_text(c.s));
        MZVIndex idx(c.s);
        const auto witness = v_adic_trivial_witness(*c.fp, idx, c.v.degree());
        ctx.record()["trivial"] = witness.has_value();
        ctx.record()["witness"] = witness ? witness_to_json(*witness) : Json(nullptr);
        if (witness) {
            ZeroReport rep = zeta_v_adic(c.fp, idx, c.v);
            ctx.record()["value"] = rep.value.to_string();
            ctx.check(rep.is_zero, "trivial-sufficiency", "trivial witness forces the value to zero",
                      rep.value.to_string());
        }
        return ctx.finish();
    };
    return suite;
}

// ---------------------------------------------------------------------------
// all-primes-example: the canonical all-primes trivial zeros built from
// prime-power exponents, with expected witnesses and full evaluation across
// every prime of degree <= r.
// ---------------------------------------------------------------------------

PreparedSuite prepare_all_primes_example(const GridSpec& grid) {
    struct Cell {
        Field fp;
        std::vector<std::int64_t> s;
        bool expect_trivial;
        std::map<std::size_t, Witness> expected_witnesses;  // degree -> witness (when pinned)
        bool evaluate;                                      // also check zeta_v == 0 everywhere
    };
    auto cells = std::make_shared<std::vector<Cell>>();

    PreparedSuite suite;
    suite.name = "all-primes-example";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        std::vector<Cell> local;
        if (q == 2) {
            local.push_back({fp, {-1, -1, -1, -1, -1}, true,
                             {{1, Witness{1, std::nullopt}},
                              {2, Witness{1, std::nullopt}},
                              {3, Witness{3, 1}},
                              {4, Witness{3, 1}},
                              {5, Witness{3, 1}}},
                             true});
            local.push_back({fp, {-1, -2, -4, -8, -16}, true, {}, true});
            local.push_back({fp, {-2, -4, -8, -1, -2}, true, {}, true});
            local.push_back({fp, {-1, -1, -1, -1, -1, -1}, true, {}, false});
            local.push_back({fp, {-1, -1, -1, -1}, false, {}, false});  // r=4: fails at degree 2
        } else {
            const auto p = static_cast<std::int64_t>(fp->p());
            local.push_back({fp, {-1, -1, -1}, true,
                             {{1, Witness{1, std::nullopt}}, {2, Witness{2, 1}}, {3, Witness{2, 1}}},
                             true});
            local.push_back({fp, {-1, -p, -p * p}, true, {}, true});
            local.push_back({fp, {-p * p, -p, -1}, true, {}, true});
            local.push_back({fp, {-1, -p, -p * p, -5}, true, {}, false});
            local.push_back({fp, {-1, -1}, false, {}, false});  // r=2: fails already at degree 1
        }
        for (auto& cell : local) {
            suite.keys.push_back("q=" + std::to_string(q) + ";s=" + tuple_text(cell.s));
            cells->push_back(std::move(cell));
        }
    }

    suite.eval = [cells, keys = suite.keys](std::size_t i) {
        const Cell& c = (*cells)[i];
        CellCtx ctx(keys[i], "classify --q " + std::to_string(c.fp->q()) + " --tuple " +
                                 tuple_text(c.s) + " --all-primes");
        MZVIndex idx(c.s);
        const auto report = all_primes_trivial_zero(*c.fp, idx);
        ctx.check(report.trivial_for_all == c.expect_trivial, "all-primes-iff",
                  c.expect_trivial ? "trivial for all primes" : "not trivial for all primes",
                  report.trivial_for_all ? "trivial" : "not trivial");
        Json degrees = Json::array();
        for (const auto& [deg, w] : report.per_degree) {
            Json entry{{"deg", deg}};
            entry["witness"] = w ? witness_to_json(*w) : Json(nullptr);
            degrees.push_back(entry);
            auto expected = c.expected_witnesses.find(deg);
            if (expected != c.expected_witnesses.end()) {
                const bool match = w.has_value() && *w == expected->second;
                ctx.check(match, "witness-match",
                          "degree " + std::to_string(deg) + " witness == " +
                              witness_to_json(expected->second).dump(),
                          w ? witness_to_json(*w).dump() : "none");
            }
        }
        ctx.record()["witnesses"] = degrees;

        if (c.evaluate && c.expect_trivial) {
            for (std::size_t deg = 1; deg <= idx.depth(); ++deg)
                for (const auto& v : primes_of_degree(c.fp, deg)) {
                    ZeroReport rep = zeta_v_adic(c.fp, idx, v);
                    ctx.check(rep.is_zero, "zeta-zero-all-primes", "zeta_v == 0 at v = " + v.to_string(),
                              rep.value.to_string());
                }
        }
        return ctx.finish();
    };
    return suite;
}

// ---------------------------------------------------------------------------
// conjecture search: over primes of degree >= 2, a zero must carry a trivial
// witness (else it is a counterexample finding) and a witness must force a
// zero (else the sufficiency theorem itself failed).
// ---------------------------------------------------------------------------

PreparedSuite prepare_conjecture(const GridSpec& grid) {
    for (auto deg : grid.prime_degrees)
        if (deg < 2)
            throw std::invalid_argument("the conjecture search runs over primes of degree >= 2");
    if (grid.min_depth < 2)
        throw std::invalid_argument("the conjecture search needs depth >= 2");

    struct Cell {
        Field fp;
        PrimeModulus v;
        std::vector<std::int64_t> s;
    };
    auto cells = std::make_shared<std::vector<Cell>>();

    PreparedSuite suite;
    suite.name = "conjecture-search";
    for (auto q : grid.q_list) {
        Field fp = FieldParams::of_order(q);
        for (auto deg : grid.prime_degrees)
            for (const auto& v : primes_of_degree(fp, deg))
                for (std::size_t r = grid.min_depth; r <= grid.max_depth; ++r)
                    for_each_tuple(r, grid.min_minus_s, grid.max_minus_s,
                                   [&](const std::vector<std::int64_t>& s) {
                                       cells->push_back({fp, v, s});
                                       suite.keys.push_back("q=" + std::to_string(q) + ";v=" +
                                                            v.to_string() + ";s=" + tuple_text(s));
                                   });
    }

    suite.eval = [cells, keys = suite.keys](std::size_t i) {
        const Cell& c = (*cells)[i];
        CellCtx ctx(keys[i], "zeta --q " + std::to_string(c.fp->q()) + " --prime " +
                                 c.v.to_string() + " --tuple " + tuple_text(c.s));
        MZVIndex idx(c.s);
        ZeroReport rep = zeta_v_adic(c.fp, idx, c.v);
        const auto witness = v_adic_trivial_witness(*c.fp, idx, c.v.degree());
        ctx.record()["is_zero"] = rep.is_zero;
        ctx.record()["trivial"] = witness.has_value();
        ctx.record()["value"] = rep.value.to_string();
        if (witness && !rep.is_zero)
            ctx.check(false, "trivial-sufficiency", "trivial witness forces the value to zero",
                      rep.value.to_string());
        if (rep.is_zero && !witness) {
            // a nontrivial zero: the search's whole point; a finding, not a failure
            Json finding = zeta_record(rep, idx);
            finding["cell"] = keys[i];
            ctx.counterexample(std::move(finding));
        }
        return ctx.finish();
    };
    return suite;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "carlitz-sheats",   "twisted-vanishing",   "extremal-degrees", "valuation-chain",
        "main-theorem",     "trivial-sufficiency", "all-primes-example"};
    return names;
}

SuiteReport run_suite(const std::string& name, const GridSpec& grid, const RunOptions& opts) {
    if (name == "carlitz-sheats") return run_prepared(prepare_carlitz_sheats(grid), grid, opts);
    if (name == "twisted-vanishing")
        return run_prepared(prepare_twisted_vanishing(grid), grid, opts);
    if (name == "extremal-degrees") return run_prepared(prepare_extremal_degrees(grid), grid, opts);
    if (name == "valuation-chain") return run_prepared(prepare_valuation_chain(grid), grid, opts);
    if (name == "main-theorem") return run_prepared(prepare_main_theorem(grid), grid, opts);
    if (name == "trivial-sufficiency")
        return run_prepared(prepare_trivial_sufficiency(grid), grid, opts);
    if (name == "all-primes-example")
        return run_prepared(prepare_all_primes_example(grid), grid, opts);
    throw std::invalid_argument("unknown suite: " + name);
}

SuiteReport search_conjecture(const GridSpec& grid, const RunOptions& opts) {
    return run_prepared(prepare_conjecture(grid), grid, opts);
}

}  // namespace fqmzv
