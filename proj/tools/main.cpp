// hermitia: verification CLI for the classification of universal binary
// Hermitian forms. Exit codes: 0 pass, 1 verification failure, 2 bad usage.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "hermitia/classify.hpp"

using namespace hermitia;

namespace {

// Accepts either a lattice (catalog label or m=..:[..] Gram) or a quadratic
// form polynomial, and hands back the nondegenerate quadratic form.
QuadraticForm form_from_text(const std::string& text) {
    try {
        HermitianLattice L = parse_lattice(text);
        return extract_basis(trace_form(L)).form;
    } catch (const std::invalid_argument&) {
    }
    QuadraticForm q = parse_form(text);
    if (!q.positive_semidefinite())
        throw std::invalid_argument("form is not positive semidefinite: " + text);
    return extract_basis(q).form;
}

const CriterionSet& set_by_name(const std::string& name) {
    if (name == "15") return criterion_set(SetName::S15);
    if (name == "290") return criterion_set(SetName::S290);
    if (name == "15h" || name == "15H") return criterion_set(SetName::S15H);
    throw CLI::ValidationError("--set", "expected one of 15, 290, 15h");
}

int run(int argc, char** argv) {
    CLI::App app{"verification toolkit for universal binary Hermitian forms"};
    app.require_subcommand(1);

    auto* cmd_catalog = app.add_subcommand("catalog", "list the 25 catalog lattices");

    std::string arg_lattice;
    auto* cmd_trace = app.add_subcommand("trace-form", "print the trace form of a lattice");
    cmd_trace->add_option("lattice", arg_lattice, "catalog label or m=<int>:[a,b;c,d]")->required();

    std::string arg_input, arg_set = "290";
    auto* cmd_check = app.add_subcommand("check", "run a criterion set on a form or lattice");
    cmd_check->add_option("input", arg_input, "form polynomial or lattice")->required();
    cmd_check->add_option("--set", arg_set, "criterion set: 15, 290 or 15h");

    std::string cert_lattice;
    i64 cert_bound = 2000;
    bool cert_json = false, cert_text = false;
    auto* cmd_certify = app.add_subcommand("certify", "certify universality of one lattice");
    cmd_certify->add_option("lattice", cert_lattice)->required();
    cmd_certify->add_option("--bound", cert_bound, "empirical sweep bound for the ad hoc route");
    cmd_certify->add_flag("--json", cert_json);
    cmd_certify->add_flag("--text", cert_text);

    std::string tr_form;
    i64 tr_cap = 1000;
    auto* cmd_truant = app.add_subcommand("truant", "smallest non-represented positive integer");
    cmd_truant->add_option("form", tr_form)->required();
    cmd_truant->add_option("--cap", tr_cap, "give up above this value");

    std::string rep_form;
    i64 rep_t = 0;
    auto* cmd_rep = app.add_subcommand("represents", "find a vector attaining t");
    cmd_rep->add_option("form", rep_form)->required();
    cmd_rep->add_option("t", rep_t)->required();

    std::string sp_form;
    i64 sp_upto = 100;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "represented integers up to a bound");
    cmd_spectrum->add_option("form", sp_form)->required();
    cmd_spectrum->add_option("--upto", sp_upto)->required();

    std::string esc_regime = "integral";
    int esc_rank = 4;
    bool esc_json = false;
    auto* cmd_esc = app.add_subcommand("escalators", "build and print the escalator tree");
    cmd_esc->add_option("--regime", esc_regime, "classical or integral")
        ->check(CLI::IsMember({"classical", "integral"}));
    cmd_esc->add_option("--max-rank", esc_rank)->check(CLI::Range(0, 4));
    cmd_esc->add_flag("--json", esc_json);

    i64 vc_bound = 2000;
    bool vc_json = false, vc_text = false;
    auto* cmd_verify =
        app.add_subcommand("verify-classification", "end-to-end verification of the classification");
    cmd_verify->add_option("--bound", vc_bound, "empirical sweep bound for the ad hoc route");
    cmd_verify->add_flag("--json", vc_json);
    cmd_verify->add_flag("--text", vc_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors map to 2; --help stays 0
    }

    if (*cmd_catalog) {
        for (const HermitianLattice& L : catalog())
            std::cout << L.label << "  " << to_string(L) << "\n";
        return 0;
    }
    if (*cmd_trace) {
        HermitianLattice L = parse_lattice(arg_lattice);
        QuadraticForm q = trace_form(L);
        std::cout << to_string(q) << "\n";
        ExtractedBasis eb = extract_basis(q);
        if (eb.form.vars() != q.vars())
            std::cout << "nondegenerate part: " << to_string(eb.form) << "\n";
        return 0;
    }
    if (*cmd_check) {
        QuadraticForm q = form_from_text(arg_input);
        CriterionOutcome out = check_criterion(q, set_by_name(arg_set));
        if (out.pass) {
            std::cout << out.set_name << ": pass\n";
            for (const auto& w : out.witnesses) {
                std::cout << "  " << w.t << " = Q(";
                for (std::size_t i = 0; i < w.vec.size(); ++i)
                    std::cout << (i ? "," : "") << w.vec[i];
                std::cout << ")\n";
            }
            return 0;
        }
        std::cout << out.set_name << ": fail at " << *out.first_failure << "\n";
        return 1;
    }
    if (*cmd_certify) {
        HermitianLattice L = parse_lattice(cert_lattice);
        CertificationReport rep = certify(L, cert_bound);
        if (cert_json)
            std::cout << to_json_string(rep) << "\n";
        else
            std::cout << to_text(rep);
        bool ok = rep.route != Route::AdHocRequired || rep.empirical_pass;
        return ok ? 0 : 1;
    }
    if (*cmd_truant) {
        QuadraticForm q = form_from_text(tr_form);
        TruantResult tr = truant(q, tr_cap);
        if (tr.exhausted) {
            std::cout << "no truant <= " << tr_cap << "\n";
            return 0;
        }
        std::cout << tr.value << "\n";
        return 0;
    }
    if (*cmd_rep) {
        if (rep_t < 0) throw CLI::ValidationError("t", "must be nonnegative");
        QuadraticForm q = form_from_text(rep_form);
        auto w = represents(q, rep_t);
        if (!w) {
            std::cout << rep_t << " is not represented\n";
            return 1;
        }
        std::cout << rep_t << " = Q(";
        for (std::size_t i = 0; i < w->vec.size(); ++i)
            std::cout << (i ? "," : "") << w->vec[i];
        std::cout << ")\n";
        return 0;
    }
    if (*cmd_spectrum) {
        if (sp_upto < 0) throw CLI::ValidationError("--upto", "must be nonnegative");
        QuadraticForm q = form_from_text(sp_form);
        std::vector<bool> mask = represented_set(q, sp_upto);
        bool first = true;
        for (i64 t = 0; t <= sp_upto; ++t)
            if (mask[t]) {
                std::cout << (first ? "" : " ") << t;
                first = false;
            }
        std::cout << "\n";
        return 0;
    }
    if (*cmd_esc) {
        Regime regime = esc_regime == "classical" ? Regime::Classical : Regime::IntegerValued;
        EscalatorTree tree = build_tree(regime, esc_rank);
        if (esc_json) {
            std::cout << to_json_string(tree) << "\n";
            return 0;
        }
        for (std::size_t r = 0; r < tree.levels.size(); ++r) {
            std::cout << "rank " << r << ": " << tree.levels[r].size() << " classes\n";
            for (const auto& n : tree.levels[r]) {
                std::cout << "  " << to_string(n.form);
                if (n.truant)
                    std::cout << "  truant " << *n.truant;
                else
                    std::cout << "  no truant <= " << tree.truant_cap;
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (*cmd_verify) {
        ClassificationReport rep = verify_classification(vc_bound);
        if (vc_json)
            std::cout << to_json_string(rep) << "\n";
        else
            std::cout << to_text(rep);
        return rep.overall_pass ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
