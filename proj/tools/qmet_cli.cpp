// qmet: exact q-metric / ultrametric / p-adic toolkit command line.
//
// Subcommands mirror the library modules:
//   absval eval|audit|equiv       absolute values on the rationals
//   padic embed|arith|geom|digits residue arithmetic mod p^j
//   metric verify|maxq|power      distance-matrix auditors
//   chain partition|subdominant|length|profile|quantize
//   lr norm|tail|erdos|sphere     finitely supported l^r vectors
//   measure integrate|norm|dmu|decompose|path|push
//
// Exit codes: 0 success, 1 domain error, 2 parse/usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qmet/absolute_value.hpp"
#include "qmet/chain.hpp"
#include "qmet/errors.hpp"
#include "qmet/finite_vec.hpp"
#include "qmet/metric_checks.hpp"
#include "qmet/padic.hpp"
#include "qmet/pushforward.hpp"
#include "qmet/simple_fn.hpp"

namespace {

using namespace qmet;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string mag_str(const Magnitude& m) {
    if (m.is_exact()) return m.str();
    std::ostringstream os;
    os.precision(12);
    os << m.to_double();
    return os.str();
}

struct ScalarFlags {
    std::string kind = "real";
    long p = 2;
    std::string pow = "1";

    AbsoluteValue build() const {
        AbsoluteValue base = AbsoluteValue::real_std();
        if (kind == "trivial") {
            base = AbsoluteValue::trivial();
        } else if (kind == "padic") {
            base = AbsoluteValue::padic(p);
        } else if (kind != "real") {
            throw ParseError("unknown scalar kind '" + kind + "' (want trivial|real|padic)");
        }
        Rational e = Rational::parse(pow);
        return e.is_one() ? base : AbsoluteValue::power(base, e);
    }

    void attach(CLI::App* cmd, const std::string& suffix = "") {
        cmd->add_option("--kind" + suffix, kind, "scalar kind: trivial|real|padic");
        cmd->add_option("--p" + suffix, p, "prime for the padic kind");
        cmd->add_option("--pow" + suffix, pow, "positive rational exponent applied to the base kind");
    }
};

std::optional<Rational> parse_r_or_inf(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::nullopt;
    return Rational::parse(s);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// ---- absval ---------------------------------------------------------------

void register_absval(CLI::App& app) {
    auto* absval = app.add_subcommand("absval", "absolute-value functions on the rationals");
    absval->require_subcommand(1);

    {
        auto* eval = absval->add_subcommand("eval", "evaluate |x|");
        auto flags = std::make_shared<ScalarFlags>();
        auto x = std::make_shared<std::string>();
        flags->attach(eval);
        eval->add_option("--x", *x, "rational argument")->required();
        eval->callback([flags, x]() {
            Magnitude m = abs_eval(flags->build(), Rational::parse(*x));
            std::cout << "abs=" << mag_str(m) << "\n";
        });
    }
    {
        auto* audit = absval->add_subcommand("audit", "report q-subadditivity violations over sample pairs");
        auto flags = std::make_shared<ScalarFlags>();
        auto q = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        flags->attach(audit);
        audit->add_option("--q", *q, "positive rational exponent")->required();
        audit->add_option("file", *file, "pairs file, one 'x y' per line (default stdin)");
        audit->callback([flags, q, file]() {
            std::istringstream in(slurp(*file));
            std::vector<std::pair<Rational, Rational>> pairs;
            std::string xs, ys;
            while (in >> xs) {
                if (!(in >> ys)) throw ParseError("audit: dangling sample '" + xs + "'");
                pairs.emplace_back(Rational::parse(xs), Rational::parse(ys));
            }
            auto viol = check_q_subadditive(flags->build(), pairs, Rational::parse(*q));
            for (const auto& [x, y] : viol) std::cout << x.str() << " " << y.str() << "\n";
            std::cout << "violations=" << viol.size() << "\n";
        });
    }
    {
        auto* equiv = absval->add_subcommand("equiv", "solve |x|_2 = |x|_1^a over sample values");
        auto f1 = std::make_shared<ScalarFlags>();
        auto f2 = std::make_shared<ScalarFlags>();
        auto file = std::make_shared<std::string>();
        f1->attach(equiv, "1");
        f2->attach(equiv, "2");
        equiv->add_option("file", *file, "samples file, one nonzero rational per line (default stdin)");
        equiv->callback([f1, f2, file]() {
            std::istringstream in(slurp(*file));
            std::vector<Rational> samples;
            std::string tok;
            while (in >> tok) samples.push_back(Rational::parse(tok));
            auto r = equivalence_exponent(f1->build(), f2->build(), samples);
            switch (r.status) {
                case EquivalenceExponent::Status::Found:
                    if (r.exact) {
                        std::cout << "a=" << r.value.str() << "\n";
                    } else {
                        std::cout << "a~=" << r.approx << "\n";
                    }
                    break;
                case EquivalenceExponent::Status::Absent: std::cout << "a=absent\n"; break;
                case EquivalenceExponent::Status::Underdetermined: std::cout << "a=underdetermined\n"; break;
            }
        });
    }
}

// ---- padic ----------------------------------------------------------------

void print_padic(const PadicApprox& x) {
    std::cout << "residue=" << x.residue().get_str() << " digits=";
    auto d = x.digits();
    for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i];
    std::cout << "\n";
}

void register_padic(CLI::App& app) {
    auto* padic = app.add_subcommand("padic", "finite-precision p-adic integers (residues mod p^j)");
    padic->require_subcommand(1);

    auto add_pj = [](CLI::App* cmd, std::shared_ptr<long> p, std::shared_ptr<unsigned> j) {
        cmd->add_option("--p", *p, "prime")->required();
        cmd->add_option("--prec", *j, "precision j (residues mod p^j)")->required();
    };

    {
        auto* embed = padic->add_subcommand("embed", "embed a rational with |w|_p <= 1");
        auto p = std::make_shared<long>();
        auto j = std::make_shared<unsigned>();
        auto w = std::make_shared<std::string>();
        add_pj(embed, p, j);
        embed->add_option("--value", *w, "rational w = a/b with p not dividing b")->required();
        embed->callback([p, j, w]() { print_padic(PadicApprox::from_rational(Rational::parse(*w), *p, *j)); });
    }
    {
        auto* arith = padic->add_subcommand("arith", "residue arithmetic on embedded rationals");
        auto p = std::make_shared<long>();
        auto j = std::make_shared<unsigned>();
        auto op = std::make_shared<std::string>();
        auto lhs = std::make_shared<std::string>();
        auto rhs = std::make_shared<std::string>("0");
        add_pj(arith, p, j);
        arith->add_option("--op", *op, "add|sub|mul|neg|inv")->required();
        arith->add_option("--lhs", *lhs, "left operand (rational)")->required();
        arith->add_option("--rhs", *rhs, "right operand (rational), binary ops only");
        arith->callback([p, j, op, lhs, rhs]() {
            PadicApprox a = PadicApprox::from_rational(Rational::parse(*lhs), *p, *j);
            PadicApprox b = PadicApprox::from_rational(Rational::parse(*rhs), *p, *j);
            if (*op == "add") {
                print_padic(a + b);
            } else if (*op == "sub") {
                print_padic(a - b);
            } else if (*op == "mul") {
                print_padic(a * b);
            } else if (*op == "neg") {
                print_padic(-a);
            } else if (*op == "inv") {
                print_padic(a.invert());
            } else {
                throw ParseError("unknown op '" + *op + "' (want add|sub|mul|neg|inv)");
            }
        });
    }
    {
        auto* geom = padic->add_subcommand("geom", "geometric series of an embedded rational with |x|_p < 1");
        auto p = std::make_shared<long>();
        auto j = std::make_shared<unsigned>();
        auto w = std::make_shared<std::string>();
        auto n = std::make_shared<long>(-1);
        add_pj(geom, p, j);
        geom->add_option("--value", *w, "series ratio x")->required();
        geom->add_option("--n", *n, "partial-sum upper index; omit for the limit 1/(1-x)");
        geom->callback([p, j, w, n]() {
            PadicApprox x = PadicApprox::from_rational(Rational::parse(*w), *p, *j);
            if (*n < 0) {
                print_padic(PadicApprox::geometric_limit(x));
            } else {
                print_padic(PadicApprox::geometric_sum(x, static_cast<unsigned long>(*n)));
            }
        });
    }
    {
        auto* digits = padic->add_subcommand("digits", "base-p digits of an embedded rational");
        auto p = std::make_shared<long>();
        auto j = std::make_shared<unsigned>();
        auto w = std::make_shared<std::string>();
        add_pj(digits, p, j);
        digits->add_option("--value", *w, "rational to expand")->required();
        digits->callback([p, j, w]() {
            auto d = PadicApprox::from_rational(Rational::parse(*w), *p, *j).digits();
            std::cout << "digits=";
            for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i];
            std::cout << "\n";
        });
    }
}

// ---- metric ---------------------------------------------------------------

DistMatrix matrix_from(const std::string& path) {
    std::istringstream in(slurp(path));
    return DistMatrix::parse(in);
}

void register_metric(CLI::App& app) {
    auto* metric = app.add_subcommand("metric", "distance-matrix auditors");
    metric->require_subcommand(1);

    {
        auto* verify = metric->add_subcommand("verify", "q-metric or ultrametric axiom scan");
        auto q = std::make_shared<std::string>();
        auto ultra = std::make_shared<bool>(false);
        auto file = std::make_shared<std::string>();
        verify->add_option("--q", *q, "triangle exponent to audit");
        verify->add_flag("--ultra", *ultra, "audit the max-form (ultrametric) inequality");
        verify->add_option("file", *file, "distance matrix file (default stdin)");
        verify->callback([q, ultra, file]() {
            DistMatrix D = matrix_from(*file);
            std::vector<TripleViolation> viol;
            if (*ultra) {
                if (!q->empty()) throw ParseError("verify: --q and --ultra are mutually exclusive");
                viol = verify_ultrametric(D);
            } else {
                if (q->empty()) throw ParseError("verify: one of --q or --ultra is required");
                viol = verify_qmetric(D, Rational::parse(*q));
            }
            for (const auto& v : viol) std::cout << v.x << " " << v.y << " " << v.z << "\n";
            std::cout << "violations=" << viol.size() << "\n";
        });
    }
    {
        auto* maxq = metric->add_subcommand("maxq", "largest exponent at which the matrix stays a q-metric");
        auto file = std::make_shared<std::string>();
        maxq->add_option("file", *file, "distance matrix file (default stdin)");
        maxq->callback([file]() {
            auto r = max_metric_exponent(matrix_from(*file));
            switch (r.kind) {
                case MaxExponent::Kind::Finite: {
                    std::ostringstream os;
                    os.precision(10);
                    os << r.value;
                    std::cout << "q*=" << os.str() << "\n";
                    break;
                }
                case MaxExponent::Kind::Ultrametric: std::cout << "q*=inf\n"; break;
                case MaxExponent::Kind::BelowRange: std::cout << "q*=out-of-range-low\n"; break;
                case MaxExponent::Kind::AboveRange: std::cout << "q*=out-of-range-high\n"; break;
            }
        });
    }
    {
        auto* power = metric->add_subcommand("power", "entrywise d^a transform");
        auto a = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        power->add_option("--a", *a, "positive rational exponent")->required();
        power->add_option("file", *file, "distance matrix file (default stdin)");
        power->callback([a, file]() { power_transform(matrix_from(*file), Rational::parse(*a)).emit(std::cout); });
    }
}

// ---- chain ----------------------------------------------------------------

void register_chain(CLI::App& app) {
    auto* chain = app.add_subcommand("chain", "eta-chain connectivity and chain lengths");
    chain->require_subcommand(1);

    {
        auto* part = chain->add_subcommand("partition", "eta-chain equivalence classes, one block per line");
        auto eta = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        part->add_option("--eta", *eta, "positive threshold")->required();
        part->add_option("file", *file, "distance matrix file (default stdin)");
        part->callback([eta, file]() {
            eta_partition(matrix_from(*file), Magnitude(Rational::parse(*eta))).emit(std::cout);
        });
    }
    {
        auto* sub = chain->add_subcommand("subdominant", "largest ultrametric below the matrix");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "distance matrix file (default stdin)");
        sub->callback([file]() { subdominant_ultrametric(matrix_from(*file)).emit(std::cout); });
    }
    {
        auto* len = chain->add_subcommand("length", "a-length of a chain of labels");
        auto pts = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        len->add_option("--chain", *pts, "comma-separated labels, repetitions allowed")->required();
        len->add_option("--a", *a, "positive rational exponent or 'inf'")->required();
        len->add_option("file", *file, "distance matrix file (default stdin)");
        len->callback([pts, a, file]() {
            auto aa = parse_r_or_inf(*a);
            auto r = chain_a_length(matrix_from(*file), Chain{split_commas(*pts)}, aa);
            std::cout << "length=" << mag_str(r.value);
            if (aa) std::cout << " power_sum=" << mag_str(r.power_sum);
            std::cout << "\n";
        });
    }
    {
        auto* prof = chain->add_subcommand("profile", "largest separating threshold inside an open ball");
        auto x = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        prof->add_option("--x", *x, "center label")->required();
        prof->add_option("--r", *r, "positive ball radius")->required();
        prof->add_option("file", *file, "distance matrix file (default stdin)");
        prof->callback([x, r, file]() {
            auto z = zero_dim_profile(matrix_from(*file), *x, Magnitude(Rational::parse(*r)));
            switch (z.kind) {
                case ZeroDimProfile::Kind::Finite: std::cout << "eta*=" << mag_str(z.eta) << "\n"; break;
                case ZeroDimProfile::Kind::Unbounded: std::cout << "eta*=unbounded\n"; break;
                case ZeroDimProfile::Kind::Absent: std::cout << "eta*=none\n"; break;
            }
        });
    }
    {
        auto* quant = chain->add_subcommand("quantize", "round an ultrametric up to powers of a base");
        auto base = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        quant->add_option("--base", *base, "rational base > 1")->required();
        quant->add_option("file", *file, "distance matrix file (default stdin)");
        quant->callback([base, file]() { quantize_metric(matrix_from(*file), Rational::parse(*base)).emit(std::cout); });
    }
}

// ---- lr -------------------------------------------------------------------

void register_lr(CLI::App& app) {
    auto* lr = app.add_subcommand("lr", "l^r norms of finitely supported vectors");
    lr->require_subcommand(1);

    auto add_space = [](CLI::App* cmd, std::shared_ptr<ScalarFlags> flags, std::shared_ptr<unsigned> dim) {
        flags->attach(cmd);
        cmd->add_option("--dim", *dim, "coordinate dimension (default 1)");
    };

    {
        auto* norm = lr->add_subcommand("norm", "l^r norm of a vector file");
        auto flags = std::make_shared<ScalarFlags>();
        auto dim = std::make_shared<unsigned>(1);
        auto r = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        add_space(norm, flags, dim);
        norm->add_option("--r", *r, "positive rational exponent or 'inf'")->required();
        norm->add_option("file", *file, "vector file (default stdin)");
        norm->callback([flags, dim, r, file]() {
            NormedSpace s(flags->build(), *dim);
            std::istringstream in(slurp(*file));
            FiniteVec f = FiniteVec::parse(s, in);
            auto rr = parse_r_or_inf(*r);
            auto n = lr_norm(s, f, rr);
            std::cout << "norm=" << mag_str(n.value);
            if (rr) std::cout << " power_sum=" << mag_str(n.power_sum);
            std::cout << " regime=" << (rr ? regime_name(triangle_regime(s, *rr)) : "ultranorm-sup");
            std::cout << "\n";
        });
    }
    {
        auto* tail = lr->add_subcommand("tail", "minimal head set A(eps) with tail r-sum under eps");
        auto flags = std::make_shared<ScalarFlags>();
        auto dim = std::make_shared<unsigned>(1);
        auto eps = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        add_space(tail, flags, dim);
        tail->add_option("--eps", *eps, "positive tail budget")->required();
        tail->add_option("--r", *r, "positive rational exponent")->required();
        tail->add_option("file", *file, "vector file (default stdin)");
        tail->callback([flags, dim, eps, r, file]() {
            NormedSpace s(flags->build(), *dim);
            std::istringstream in(slurp(*file));
            FiniteVec f = FiniteVec::parse(s, in);
            for (const auto& k : tail_support(s, f, Rational::parse(*eps), Rational::parse(*r)))
                std::cout << k << "\n";
        });
    }
    {
        auto* erdos = lr->add_subcommand("erdos", "additive chain with constant step norm");
        auto flags = std::make_shared<ScalarFlags>();
        auto dim = std::make_shared<unsigned>(1);
        auto keys = std::make_shared<std::string>();
        auto value = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        add_space(erdos, flags, dim);
        erdos->add_option("--keys", *keys, "comma-separated distinct keys")->required();
        erdos->add_option("--value", *value, "comma-separated coordinates of v_eta")->required();
        erdos->add_option("--r", *r, "positive rational exponent")->required();
        erdos->callback([flags, dim, keys, value, r]() {
            NormedSpace s(flags->build(), *dim);
            Vec v;
            for (const auto& c : split_commas(*value)) v.push_back(Rational::parse(c));
            Rational rr = Rational::parse(*r);
            auto chain = erdos_chain(s, split_commas(*keys), v, rr);
            for (size_t l = 1; l < chain.size(); ++l) {
                auto step = lr_norm(s, chain[l].sub(s, chain[l - 1]), rr);
                auto total = lr_norm(s, chain[l], rr);
                std::cout << "l=" << l << " step_power=" << mag_str(step.power_sum)
                          << " norm_power=" << mag_str(total.power_sum) << "\n";
            }
        });
    }
    {
        auto* sphere = lr->add_subcommand("sphere", "tail bound for g near a sphere of radius t");
        auto flags = std::make_shared<ScalarFlags>();
        auto dim = std::make_shared<unsigned>(1);
        auto fpath = std::make_shared<std::string>();
        auto gpath = std::make_shared<std::string>();
        auto t = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        add_space(sphere, flags, dim);
        sphere->add_option("--f", *fpath, "vector file with ||f||_r = t")->required();
        sphere->add_option("--g", *gpath, "vector file with ||g||_r <= t")->required();
        sphere->add_option("--t", *t, "sphere radius")->required();
        sphere->add_option("--eps", *eps, "tail budget")->required();
        sphere->add_option("--r", *r, "positive rational exponent")->required();
        sphere->callback([flags, dim, fpath, gpath, t, eps, r]() {
            NormedSpace s(flags->build(), *dim);
            std::istringstream fin(slurp(*fpath)), gin(slurp(*gpath));
            FiniteVec f = FiniteVec::parse(s, fin), g = FiniteVec::parse(s, gin);
            auto v = sphere_tail_bound(s, f, g, Rational::parse(*t), Rational::parse(*eps), Rational::parse(*r));
            std::cout << "tail=" << mag_str(v.tail_power) << " ok=" << (v.within_bound ? "true" : "false")
                      << "\n";
        });
    }
}

// ---- measure --------------------------------------------------------------

FAMeasure measure_from(const std::string& path) {
    if (path.empty()) return FAMeasure::lebesgue();
    std::istringstream in(slurp(path));
    return FAMeasure::parse(in);
}

void register_measure(CLI::App& app) {
    auto* measure = app.add_subcommand("measure", "interval algebra, simple functions, integration");
    measure->require_subcommand(1);

    {
        auto* integrate = measure->add_subcommand("integrate", "integral of a nonnegative simple function");
        auto fn = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        integrate->add_option("--fn", *fn, "simple-function file")->required();
        integrate->add_option("--measure", *mu, "distribution-function file (default Lebesgue)");
        integrate->callback([fn, mu]() {
            std::istringstream in(slurp(*fn));
            std::cout << "integral=" << integrate_simple(measure_from(*mu), SimpleFn::parse(in, 1)).str() << "\n";
        });
    }
    {
        auto* norm = measure->add_subcommand("norm", "L^r norm of a vector-valued simple function");
        auto flags = std::make_shared<ScalarFlags>();
        auto dim = std::make_shared<unsigned>(1);
        auto fn = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        flags->attach(norm);
        norm->add_option("--dim", *dim, "value dimension (default 1)");
        norm->add_option("--fn", *fn, "simple-function file")->required();
        norm->add_option("--r", *r, "positive rational exponent or 'inf'")->required();
        norm->add_option("--measure", *mu, "distribution-function file (default Lebesgue)");
        norm->callback([flags, dim, fn, r, mu]() {
            NormedSpace s(flags->build(), *dim);
            std::istringstream in(slurp(*fn));
            auto rr = parse_r_or_inf(*r);
            auto n = lr_norm_simple(measure_from(*mu), s, SimpleFn::parse(in, *dim), rr);
            std::cout << "norm=" << mag_str(n.value);
            if (rr) std::cout << " power_sum=" << mag_str(n.power_sum);
            std::cout << "\n";
        });
    }
    {
        auto* dmu = measure->add_subcommand("dmu", "symmetric-difference pseudometric of two interval sets");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        dmu->add_option("--a", *a, "interval-set file ('a b' endpoint pairs)")->required();
        dmu->add_option("--b", *b, "interval-set file")->required();
        dmu->add_option("--measure", *mu, "distribution-function file (default Lebesgue)");
        dmu->callback([a, b, mu]() {
            std::istringstream ia(slurp(*a)), ib(slurp(*b));
            std::cout << "dmu="
                      << sym_diff_metric(measure_from(*mu), IntervalSet::parse(ia), IntervalSet::parse(ib)).str()
                      << "\n";
        });
    }
    {
        auto* dec = measure->add_subcommand("decompose", "split a set into pieces of measure under eps");
        auto set = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        dec->add_option("--set", *set, "interval-set file")->required();
        dec->add_option("--eps", *eps, "positive piece budget")->required();
        dec->add_option("--measure", *mu, "distribution-function file (default Lebesgue)");
        dec->callback([set, eps, mu]() {
            std::istringstream in(slurp(*set));
            auto pieces = chain_decompose(measure_from(*mu), IntervalSet::parse(in), Rational::parse(*eps));
            for (const auto& p : pieces) {
                bool first = true;
                for (const auto& [x, y] : p.pieces()) {
                    std::cout << (first ? "" : " ") << x.str() << " " << y.str();
                    first = false;
                }
                std::cout << "\n";
            }
        });
    }
    {
        auto* path = measure->add_subcommand("path", "truncation-path difference norm against its modulus bound");
        auto flags = std::make_shared<ScalarFlags>();
        auto dim = std::make_shared<unsigned>(1);
        auto fn = std::make_shared<std::string>();
        auto t1 = std::make_shared<std::string>();
        auto t2 = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        flags->attach(path);
        path->add_option("--dim", *dim, "value dimension (default 1)");
        path->add_option("--fn", *fn, "simple-function file")->required();
        path->add_option("--t1", *t1, "lower truncation point")->required();
        path->add_option("--t2", *t2, "upper truncation point")->required();
        path->add_option("--r", *r, "positive rational exponent")->required();
        path->add_option("--measure", *mu, "distribution-function file (default Lebesgue)");
        path->callback([flags, dim, fn, t1, t2, r, mu]() {
            NormedSpace s(flags->build(), *dim);
            std::istringstream in(slurp(*fn));
            auto pm = path_modulus(measure_from(*mu), s, SimpleFn::parse(in, *dim), Rational::parse(*t1),
                                   Rational::parse(*t2), Rational::parse(*r));
            std::cout << "diff_power=" << mag_str(pm.diff_power) << " bound_power=" << mag_str(pm.bound_power)
                      << " ok=" << (pm.within_bound ? "true" : "false") << "\n";
        });
    }
    {
        auto* push = measure->add_subcommand("push", "change of variables through an atomic pushforward");
        auto atoms = std::make_shared<std::string>();
        auto fn = std::make_shared<std::string>();
        push->add_option("--atoms", *atoms, "atoms file ('label weight point' lines)")->required();
        push->add_option("--fn", *fn, "simple-function file")->required();
        push->callback([atoms, fn]() {
            std::istringstream ia(slurp(*atoms)), ifn(slurp(*fn));
            auto af = parse_atoms(ia);
            auto chk = pushforward_check(af.space, af.phi, SimpleFn::parse(ifn, 1));
            std::cout << "lhs=" << chk.lhs.str() << " rhs=" << chk.rhs.str()
                      << " equal=" << (chk.equal ? "true" : "false") << "\n";
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmet: exact arithmetic for q-metrics, ultrametrics, p-adics, l^r norms and simple-function integration"};
    app.require_subcommand(1);
    register_absval(app);
    register_padic(app);
    register_metric(app);
    register_chain(app);
    register_lr(app);
    register_measure(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const qmet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
