#pragma once

// Command-line front end. Each subcommand calls one library operation and
// renders its result as text or as a JSON record (--json).
//
// Exit codes: 0 success, 1 domain error (kind printed), 2 usage error.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "binform/binform.hpp"
#include "binform/io/record.hpp"

namespace binform::cli {

using io::Json;

inline constexpr const char* kGrammar =
    "Input syntax:\n"
    "  form     [d; c0, c1, ..., cd]  (coefficient of X^(d-i) Y^i)  or  X^3 - 3*X*Y^2 - Y^3\n"
    "  matrix   [[a,b],[c,d]]  with rational entries such as 1/2\n"
    "  lattice  {[a,0],[b,c]}  (columns of the Hermite basis)\n"
    "  list     comma-separated rationals, e.g. 1,-3,1/2\n"
    "Single-form subcommands read one form per line from stdin when FORM is '-' or omitted.\n"
    "Put '--' before arguments that start with '-'.\n";

struct Outcome {
    Json record;
    std::string text;
};

inline std::vector<Rat> parse_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rat::parse(item));
    ensure(!out.empty(), ErrorKind::BadParams, "empty list");
    return out;
}

inline Pattern parse_pattern(const std::string& s) {
    for (Pattern p : {Pattern::A, Pattern::B, Pattern::C, Pattern::D})
        if (pattern_name(p) == s) return p;
    fail(ErrorKind::BadParams, "unknown pattern '" + s + "'");
}

class App {
public:
    App(std::ostream& out, std::ostream& err, std::istream& in) : out_(out), err_(err), in_(in) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"Binary forms: automorphisms, value sets and their classification.", "binform"};
        app.footer(kGrammar);
        app.require_subcommand(1);
        app.fallthrough();
        add_global_options(app);
        add_subcommands(app);
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            err_ << "usage error: " << e.what() << "\n\n" << app.help();
            return 2;
        }
        try {
            cfg_.validate();
            return action_();
        } catch (const Error& e) {
            return report_error(e);
        }
    }

private:
    std::ostream& out_;
    std::ostream& err_;
    std::istream& in_;
    Config cfg_;
    std::string denom_bound_ = "1000000";
    long seed_ = 0;
    std::function<int()> action_;

    int report_error(const Error& e) {
        if (cfg_.record)
            out_ << Json{{"error", io::to_json(e)}}.dump(2) << "\n";
        else
            err_ << "error: " << kind_name(e.kind()) << ": " << e.what() << "\n";
        return 1;
    }

    int emit(const Outcome& o) {
        if (cfg_.record)
            out_ << o.record.dump(2) << "\n";
        else
            out_ << o.text;
        return 0;
    }

    void add_global_options(CLI::App& app) {
        app.add_flag("--json", cfg_.record, "Emit JSON records instead of text");
        app.add_option("--precision-bits", cfg_.precision_bits, "Starting precision for root isolation")
            ->capture_default_str();
        app.add_option("--max-precision-bits", cfg_.max_precision_bits, "Precision cap")->capture_default_str();
        app.add_option("--denom-bound", denom_bound_, "Largest denominator in rational reconstruction")
            ->capture_default_str();
        app.add_option("--box", cfg_.box, "Half-width of value boxes")->capture_default_str();
        app.add_option("--threads", cfg_.threads, "Worker threads")->capture_default_str();
        app.add_option("--max-degree", cfg_.max_degree, "Largest supported degree")->capture_default_str();
        app.add_option("--seed", seed_, "Seed for randomized operations (all current subcommands are deterministic)");
        app.parse_complete_callback([this] { cfg_.denom_bound = Int(denom_bound_); });
    }

    /// One form from the argument, or a batch from stdin.
    int for_forms(const std::string& arg, const std::function<Outcome(const BinaryForm&)>& fn) {
        if (!arg.empty() && arg != "-") return emit(fn(parse_form(arg)));
        std::vector<std::string> lines;
        for (std::string line; std::getline(in_, line);) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            lines.push_back(line.substr(first));
        }
        std::vector<Json> records(lines.size());
        std::vector<std::string> texts(lines.size());
        std::vector<bool> failed(lines.size(), false);
        const auto work = [&](std::size_t i) {
            try {
                const Outcome o = fn(parse_form(lines[i]));
                records[i] = {{"input", lines[i]}, {"result", o.record}};
                texts[i] = o.text;
            } catch (const Error& e) {
                failed[i] = true;
                records[i] = {{"input", lines[i]}, {"error", io::to_json(e)}};
                texts[i] = "error: " + std::string(kind_name(e.kind())) + ": " + e.what() + "\n";
            }
        };
        // Forms are independent; each worker takes every n-th line.
        const std::size_t n = std::max<std::size_t>(1, std::min<std::size_t>(cfg_.threads, lines.size()));
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < lines.size(); i += n) work(i);
            });
        for (auto& th : pool) th.join();

        if (cfg_.record) {
            Json arr = Json::array();
            for (auto& r : records) arr.push_back(std::move(r));
            out_ << arr.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < lines.size(); ++i) out_ << "# " << lines[i] << "\n" << texts[i];
        }
        return std::any_of(failed.begin(), failed.end(), [](bool b) { return b; }) ? 1 : 0;
    }

    template <class T>
    static Outcome outcome(const T& v) {
        return {io::to_json(v), io::to_text(v)};
    }

    void add_subcommands(CLI::App& app) {
        auto form_arg = [](CLI::App* sub, std::string& target) {
            sub->add_option("form", target, "Form, or '-' to read forms from stdin");
        };

        {
            auto* sub = app.add_subcommand("aut", "Automorphism group Aut(F, Q) with its label");
            auto f = std::make_shared<std::string>();
            form_arg(sub, *f);
            sub->callback([this, f] {
                action_ = [this, f] {
                    return for_forms(*f, [this](const BinaryForm& form) { return outcome(automorphism_group(form, cfg_)); });
                };
            });
        }
        {
            auto* sub = app.add_subcommand("isom", "All rho in GL(2, Q) with F o rho = G");
            auto f = std::make_shared<std::string>(), g = std::make_shared<std::string>();
            sub->add_option("F", *f)->required();
            sub->add_option("G", *g)->required();
            sub->callback([this, f, g] {
                action_ = [this, f, g] {
                    const IsomSet s = isomorphisms(parse_form(*f), parse_form(*g), cfg_);
                    std::ostringstream os;
                    os << "isomorphisms: " << s.elements.size() << "\n";
                    for (const auto& m : s.elements) os << "  " << m.str() << "\n";
                    return emit({io::to_json(s), os.str()});
                };
            });
        }
        {
            auto* sub = app.add_subcommand("classify", "Ordinary or extraordinary, with witness and companion");
            auto f = std::make_shared<std::string>();
            form_arg(sub, *f);
            sub->callback([this, f] {
                action_ = [this, f] {
                    return for_forms(*f, [this](const BinaryForm& form) { return outcome(classify(form, cfg_)); });
                };
            });
        }
        {
            auto* sub = app.add_subcommand("companion", "Companion form with parity proof and certificate");
            auto f = std::make_shared<std::string>(), sigma = std::make_shared<std::string>(),
                 pattern = std::make_shared<std::string>();
            form_arg(sub, *f);
            sub->add_option("--sigma", *sigma, "Witness matrix (default: the one chosen by classify)");
            sub->add_option("--pattern", *pattern, "Witness pattern A, B, C or D");
            sub->callback([this, f, sigma, pattern] {
                action_ = [this, f, sigma, pattern] {
                    return for_forms(*f, [this, sigma, pattern](const BinaryForm& form) {
                        if (!sigma->empty()) {
                            const Mat2 s = parse_matrix(*sigma);
                            const Pattern p = pattern->empty() ? half_integrality_pattern(s) : parse_pattern(*pattern);
                            return outcome(companion(form, s, p));
                        }
                        const ClassificationReport r = classify(form, cfg_);
                        ensure(r.witness.has_value(), ErrorKind::BadWitness, "form is ordinary; no companion exists");
                        return outcome(companion(form, r.witness->sigma, r.witness->pattern));
                    });
                };
            });
        }
        {
            auto* sub = app.add_subcommand("decompose", "Split [F]_val into GL(2, Z) classes");
            auto f = std::make_shared<std::string>();
            form_arg(sub, *f);
            sub->callback([this, f] {
                action_ = [this, f] {
                    return for_forms(*f,
                                     [this](const BinaryForm& form) { return outcome(decompose_value_class(form, cfg_)); });
                };
            });
        }
        {
            auto* sub = app.add_subcommand("reduce", "Normal form (G1, G2, D, nu) of a pair assumed to share values");
            auto f = std::make_shared<std::string>(), g = std::make_shared<std::string>();
            sub->add_option("F1", *f)->required();
            sub->add_option("F2", *g)->required();
            sub->callback([this, f, g] {
                action_ = [this, f, g] { return emit(outcome(reduce_pair(parse_form(*f), parse_form(*g), cfg_))); };
            });
        }
        {
            auto* sub = app.add_subcommand("covering", "Test whether lattices cover Z^2, or check the four "
                                                       "coverings of a pair with --g1 --g2 --gamma");
            auto args = std::make_shared<std::vector<std::string>>();
            auto g1 = std::make_shared<std::string>(), g2 = std::make_shared<std::string>(),
                 gamma = std::make_shared<std::string>();
            sub->add_option("lattices", *args, "Lattices {[a,0],[b,c]}");
            // Single-valued options: CLI11 would split a bracketed "[...]" given to a list option.
            auto* o1 = sub->add_option("--g1", *g1, "Form G1 = G2 o GAMMA");
            auto* o2 = sub->add_option("--g2", *g2, "Form G2");
            auto* o3 = sub->add_option("--gamma", *gamma, "Matrix GAMMA");
            o1->needs(o2)->needs(o3);
            o2->needs(o1);
            o3->needs(o1);
            sub->callback([this, args, g1, g2, gamma] {
                if (g1->empty() == args->empty())
                    throw CLI::ValidationError("covering", "give either lattices or --g1 --g2 --gamma");
                action_ = [this, args, g1, g2, gamma] {
                    if (!g1->empty())
                        return emit(outcome(
                            verify_covering_prop(parse_form(*g1), parse_form(*g2), parse_matrix(*gamma), cfg_)));
                    std::vector<Lattice2> ls;
                    for (const auto& a : *args) ls.push_back(parse_lattice(a));
                    return emit(outcome(is_covering(ls)));
                };
            });
        }
        {
            auto* sub = app.add_subcommand("enumerate-coverings", "Minimal coverings of Z^2 by k proper sublattices");
            auto k = std::make_shared<int>(3);
            auto max_index = std::make_shared<long>(4);
            sub->add_option("--k", *k, "Number of lattices")->capture_default_str();
            sub->add_option("--max-index", *max_index, "Largest index considered")->capture_default_str();
            sub->callback([this, k, max_index] {
                action_ = [this, k, max_index] {
                    const auto covs = enumerate_coverings(*k, *max_index);
                    Json arr = Json::array();
                    std::ostringstream os;
                    os << "coverings: " << covs.size() << "\n";
                    for (const auto& c : covs) {
                        arr.push_back(io::to_json(c));
                        os << " ";
                        for (const auto& l : c) os << " " << l.str();
                        os << "\n";
                    }
                    return emit({Json{{"k", *k}, {"max_index", *max_index}, {"coverings", arr}}, os.str()});
                };
            });
        }
        {
            auto* sub = app.add_subcommand("values", "Values on the box |x|,|y| <= --box, or data for one value");
            auto f = std::make_shared<std::string>(), m = std::make_shared<std::string>();
            auto essential = std::make_shared<bool>(false), coprime = std::make_shared<bool>(false);
            form_arg(sub, *f);
            sub->add_option("--m", *m, "Report the representations of this value");
            sub->add_flag("--essential", *essential, "With --m: is the value essentially represented");
            sub->add_flag("--coprime", *coprime, "List values at coprime points");
            sub->callback([this, f, m, essential, coprime] {
                action_ = [this, f, m, essential, coprime] {
                    return for_forms(*f, [&](const BinaryForm& form) -> Outcome {
                        if (*coprime) {
                            const auto w = coprime_values(form, cfg_.box);
                            Json arr = Json::array();
                            std::ostringstream os;
                            for (const auto& v : w) {
                                arr.push_back(v.str());
                                os << v.str() << "\n";
                            }
                            return {Json{{"form", form.str()}, {"box", cfg_.box}, {"coprime_values", arr}}, os.str()};
                        }
                        if (m->empty()) return outcome(values_in_box(form, cfg_.box, cfg_));
                        const Rat value = Rat::parse(*m);
                        if (*essential) return outcome(essentially_represented(form, value, cfg_.box,
                                                                               automorphism_group(form, cfg_)));
                        const auto reps = representations(form, value, cfg_.box);
                        std::ostringstream os;
                        os << "multiplicity (box " << cfg_.box << ", lower bound): " << reps.size() << "\n";
                        for (const auto& [x, y] : reps) os << "  (" << x << "," << y << ")\n";
                        return {Json{{"form", form.str()},
                                     {"m", value.str()},
                                     {"box", cfg_.box},
                                     {"count", reps.size()},
                                     {"reps", io::to_json(reps)},
                                     {"note", "box count; a lower bound for R(F; m)"}},
                                os.str()};
                    });
                };
            });
        }
        {
            auto* sub = app.add_subcommand("witness", "Values distinguishing two forms on the box");
            auto f = std::make_shared<std::string>(), g = std::make_shared<std::string>(),
                 kind = std::make_shared<std::string>("both");
            sub->add_option("F", *f)->required();
            sub->add_option("G", *g)->required();
            sub->add_option("--kind", *kind, "multiplicity, coprime or both")
                ->check(CLI::IsMember({"multiplicity", "coprime", "both"}))
                ->capture_default_str();
            sub->callback([this, f, g, kind] {
                action_ = [this, f, g, kind] {
                    const BinaryForm a = parse_form(*f), b = parse_form(*g);
                    Json j{{"box", cfg_.box}};
                    std::ostringstream os;
                    const auto show = [&](const char* name, const std::optional<Rat>& w) {
                        j[name] = w ? Json(w->str()) : Json(nullptr);
                        os << name << " witness: " << (w ? w->str() : "none") << "\n";
                    };
                    if (*kind != "coprime") show("multiplicity", multiplicity_witness(a, b, cfg_.box, cfg_));
                    if (*kind != "multiplicity") show("coprime", coprime_witness(a, b, cfg_.box));
                    return emit({j, os.str()});
                };
            });
        }
        {
            auto* sub = app.add_subcommand("growth", "Lower bounds for N(F, X) and the log-log slope");
            auto f = std::make_shared<std::string>(), xs = std::make_shared<std::string>("1000,10000,100000,1000000");
            form_arg(sub, *f);
            sub->add_option("--x", *xs, "Increasing X values")->capture_default_str();
            sub->callback([this, f, xs] {
                action_ = [this, f, xs] {
                    std::vector<Int> values;
                    for (const auto& r : parse_list(*xs)) {
                        ensure(r.is_integer(), ErrorKind::BadParams, "X values must be integers");
                        values.push_back(r.num());
                    }
                    return for_forms(*f, [&](const BinaryForm& form) { return outcome(growth_check(form, values, cfg_)); });
                };
            });
        }
        {
            auto* sub = app.add_subcommand("family", "Build a named form: Fab a,b | PhiB b | Diagonal a,b,d | "
                                                     "DeloneWatson c[,which]");
            auto name = std::make_shared<std::string>(), params = std::make_shared<std::string>();
            sub->add_option("name", *name)->required();
            sub->add_option("params", *params, "Comma-separated parameters")->required();
            sub->callback([this, name, params] {
                action_ = [this, name, params] {
                    const auto p = parse_list(*params);
                    const BinaryForm form = family(parse_family(*name), p);
                    return emit({Json{{"family", *name}, {"form", form.str()}, {"expr", form.expr()}},
                                 form.str() + "\n" + form.expr() + "\n"});
                };
            });
        }
        {
            auto* sub = app.add_subcommand("gcdvals", "gcd of the values of an integer polynomial");
            auto coeffs = std::make_shared<std::string>();
            auto range = std::make_shared<std::vector<long>>();
            sub->add_option("coeffs", *coeffs, "Coefficients, leading first, comma-separated")->required();
            sub->add_option("--range", *range, "Sample interval LO HI")->expected(2);
            sub->callback([this, coeffs, range] {
                action_ = [this, coeffs, range] {
                    std::vector<Int> c;
                    for (const auto& r : parse_list(*coeffs)) {
                        ensure(r.is_integer(), ErrorKind::BadParams, "coefficients must be integers");
                        c.push_back(r.num());
                    }
                    std::optional<std::pair<long, long>> rg;
                    if (range->size() == 2) rg = std::make_pair((*range)[0], (*range)[1]);
                    const Int g = gcd_of_poly_values(c, rg);
                    return emit({Json{{"coeffs", io::to_json(c)}, {"gcd", g.get_str()}}, g.get_str() + "\n"});
                };
            });
        }
        {
            auto* sub = app.add_subcommand("demo-delone-watson",
                                           "The quadratic pair X^2+XY+Y^2 and 4X^2+2XY+Y^2 with equal values");
            auto limit = std::make_shared<long>(1000);
            sub->add_option("--limit", *limit, "Compare all values up to this bound")->capture_default_str();
            sub->callback([this, limit] { action_ = [this, limit] { return emit(delone_watson(*limit)); }; });
        }
    }

    /**
     * F = X^2 + XY + Y^2 is fixed by sigma = (-1 -1; 1 0) of order 3, so the
     * parity proof gives F(Z^2) = F(2X, Y)(Z^2). Both forms are positive
     * definite with F >= (3/4) max(x, y)^2, so a box of half-width
     * sqrt(4 L / 3) sees every value up to L and the comparison is complete.
     */
    static Outcome delone_watson(long limit) {
        ensure(limit >= 1 && limit <= 1000000, ErrorKind::BadParams, "limit must be in [1, 10^6]");
        const BinaryForm f = form_delone_watson(1);
        const BinaryForm h = compose(f, Mat2::diag(2, 1));
        const ParityProof proof = parity_proof(f, Mat2(-1, -1, 1, 0));
        const long box = static_cast<long>(std::ceil(std::sqrt(4.0 * static_cast<double>(limit) / 3.0))) + 1;
        const auto upto = [&](const BinaryForm& g) {
            std::set<Rat> out;
            for (long x = -box; x <= box; ++x)
                for (long y = -box; y <= box; ++y) {
                    const Rat v = g(Rat(x), Rat(y));
                    if (!v.is_zero() && v <= Rat(limit)) out.insert(v);
                }
            return out;
        };
        const auto vf = upto(f), vh = upto(h);
        const bool equal = vf == vh;
        const Rat df = discriminant(f), dh = discriminant(h);
        std::ostringstream os;
        os << "F = " << f.expr() << "\nH = " << h.expr() << "\n"
           << io::to_text(proof) << "values up to " << limit << ": " << vf.size() << " for F, " << vh.size()
           << " for H, equal: " << (equal ? "true" : "false") << "\ndisc F = " << df.str() << ", disc H = " << dh.str()
           << " (not GL(2,Z)-equivalent)\n";
        return {Json{{"F", f.str()},
                     {"H", h.str()},
                     {"proof", io::to_json(proof)},
                     {"limit", limit},
                     {"values_equal", equal},
                     {"value_count", vf.size()},
                     {"disc_F", df.str()},
                     {"disc_H", dh.str()}},
                os.str()};
    }
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
               std::istream& in = std::cin) {
    return App(out, err, in).run(argc, argv);
}

} // namespace binform::cli
