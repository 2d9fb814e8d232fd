// jjcoh: cohomology and structure computations for Jacobi-Jordan algebras
// given by rational structure constants.

#include <jjcoh/algebra.hpp>
#include <jjcoh/catalog.hpp>
#include <jjcoh/cochain.hpp>
#include <jjcoh/deformation.hpp>
#include <jjcoh/parse.hpp>
#include <jjcoh/representation.hpp>
#include <jjcoh/structures.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace jjcoh;

namespace {

// Exit codes: 0 success, 1 validation failure, 2 parse error, 3 domain error.
struct exit_with {
    int code;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        throw exit_with{2};
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// "catalog:NAME" or a file path.
Algebra resolve_algebra(const std::string& ref)
{
    if (ref.rfind("catalog:", 0) == 0)
        return catalog_entry(ref.substr(8)).algebra;
    return parse_algebra(read_file(ref));
}

BilinearForm resolve_form(const std::string& ref)
{
    if (ref.rfind("catalog:", 0) == 0)
        return catalog_form(ref.substr(8));
    return parse_matrix(read_file(ref));
}

void require_jacobi_jordan(const Algebra& a)
{
    if (!validate_jacobi_jordan(a).ok()) {
        std::cerr << "error: input algebra is not Jacobi-Jordan\n";
        throw exit_with{1};
    }
}

// --coefficients trivial | adjoint | rep:<ref>
Representation resolve_coefficients(const std::string& spec, const Algebra& a)
{
    Representation r;
    if (spec == "trivial") {
        r = trivial(a, 1);
    } else if (spec == "adjoint") {
        r = adjoint(a);
    } else if (spec.rfind("rep:", 0) == 0) {
        r = parse_representation(read_file(spec.substr(4)), a);
    } else {
        std::cerr << "error: --coefficients must be trivial, adjoint or rep:<file>\n";
        throw exit_with{2};
    }
    if (!check_representation(r).ok) {
        std::cerr << "error: coefficient module does not satisfy the representation axiom\n";
        throw exit_with{1};
    }
    return r;
}

std::size_t degree_cap()
{
    const char* env = std::getenv("JJCOH_MAX_DEGREE");
    std::size_t cap = 4;
    if (env) {
        try {
            cap = std::stoul(env);
        } catch (...) {
            std::cerr << "error: JJCOH_MAX_DEGREE is not a number\n";
            throw exit_with{3};
        }
    }
    return std::min(cap, max_cochain_degree);
}

void check_degree(std::size_t p)
{
    std::size_t cap = degree_cap();
    if (p > cap) {
        std::cerr << "error: degree " << p << " exceeds the configured cap " << cap << "\n";
        throw exit_with{3};
    }
}

std::string subscript_name(const std::vector<std::string>& names, std::size_t i)
{
    return i < names.size() ? names[i] : "e" + std::to_string(i + 1);
}

// Sparse rendering of one flat cochain coefficient vector.
json cochain_terms_json(const Vec& v, std::size_t n, std::size_t p, std::size_t m)
{
    json terms = json::array();
    std::vector<std::size_t> idx(p);
    for (std::size_t k = 0; k < m; ++k) {
        std::fill(idx.begin(), idx.end(), 0);
        do {
            const Rational& q = v[Cochain::flat_index(n, k, idx)];
            if (q == 0)
                continue;
            json args = json::array();
            for (std::size_t i : idx)
                args.push_back(i + 1);
            terms.push_back({{"slot", k + 1}, {"args", args}, {"coeff", rat_str(q)}});
        } while (p > 0 && Cochain::next_multi_index(idx, n));
    }
    return terms;
}

std::string cochain_terms_human(const Vec& v, const std::vector<std::string>& names, std::size_t p,
                                std::size_t m)
{
    std::size_t n = names.size();
    std::ostringstream out;
    bool first = true;
    std::vector<std::size_t> idx(p);
    for (std::size_t k = 0; k < m; ++k) {
        std::fill(idx.begin(), idx.end(), 0);
        do {
            const Rational& q = v[Cochain::flat_index(n, k, idx)];
            if (q == 0)
                continue;
            out << (first ? "" : ", ");
            first = false;
            out << "c(";
            for (std::size_t t = 0; t < p; ++t)
                out << (t ? "," : "") << subscript_name(names, idx[t]);
            out << ")";
            if (m > 1)
                out << "[" << k + 1 << "]";
            out << " = " << rat_str(q);
        } while (p > 0 && Cochain::next_multi_index(idx, n));
    }
    if (first)
        out << "0";
    return out.str();
}

json matrix_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rat_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_matrix(const Matrix& m, const std::string& indent)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << indent;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::cout << (j ? " " : "") << rat_str(m(i, j));
        std::cout << "\n";
    }
}

void emit(bool as_json, const json& doc, const std::function<void()>& human)
{
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        human();
}

json endo_basis_json(const SubspaceBasis& b, std::size_t n)
{
    json arr = json::array();
    for (std::size_t j = 0; j < b.dim(); ++j)
        arr.push_back(matrix_json(detail::endo_from_flat(n, b.vectors.column(j))));
    return arr;
}

void print_endo_basis(const SubspaceBasis& b, std::size_t n, const std::string& label)
{
    for (std::size_t j = 0; j < b.dim(); ++j) {
        std::cout << "  " << label << j + 1 << ":\n";
        print_matrix(detail::endo_from_flat(n, b.vectors.column(j)), "    ");
    }
}

AlgebraResolver cli_resolver()
{
    return [](const std::string& ref) { return resolve_algebra(ref); };
}

json residuals_json(const ResidualReport& rep, bool pair_indices)
{
    json arr = json::array();
    for (const auto& e : rep.entries) {
        json entry = {{"order", e.order}, {"i", e.i + 1}, {"j", e.j + 1}};
        if (!pair_indices)
            entry["k"] = e.k + 1;
        json res = json::array();
        for (const auto& q : e.residual)
            res.push_back(rat_str(q));
        entry["residual"] = res;
        arr.push_back(std::move(entry));
    }
    return arr;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zigzag cohomology of Jacobi-Jordan algebras over exact rationals"};
    app.require_subcommand(1);

    std::string algebra_ref, form_ref, coeff_spec = "trivial", matrix_ref, cochain_ref,
                other_ref, deformation_ref, at_value = "0", catalog_name;
    std::size_t degree = 2;
    long order_override = -1;
    std::string cls = "full", mode = "truncated";
    bool as_json = false, emit_basis = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "machine-readable output");
        return cmd;
    };
    auto add_algebra = [&](CLI::App* cmd) {
        cmd->add_option("--algebra", algebra_ref, "algebra reference (catalog:NAME or file)")->required();
        return cmd;
    };

    // validate
    auto* c_validate = add_algebra(add_common(app.add_subcommand("validate", "check the Jacobi-Jordan axioms")));
    c_validate->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        ValidationReport rep = check_cube_zero(a);
        json doc = {{"command", "validate"},
                    {"dim", a.dim()},
                    {"commutative", rep.is_commutative},
                    {"cube_zero", rep.cube_violations.empty()},
                    {"valid", rep.ok()}};
        json viols = json::array();
        for (const auto& v : rep.cube_violations) {
            json w = json::array();
            for (const auto& q : v.witness)
                w.push_back(rat_str(q));
            viols.push_back({{"witness", w}});
        }
        doc["cube_violations"] = viols;
        emit(as_json, doc, [&] {
            std::cout << "dim " << a.dim() << "\n"
                      << "commutative: " << (rep.is_commutative ? "yes" : "no") << "\n"
                      << "x(xx) = 0:   " << (rep.cube_violations.empty() ? "yes" : "no") << "\n"
                      << "valid Jacobi-Jordan: " << (rep.ok() ? "yes" : "no") << "\n";
        });
        if (!rep.ok())
            throw exit_with{1};
    });

    // info
    auto* c_info = add_algebra(add_common(app.add_subcommand("info", "annihilator, power chain, identity flags")));
    c_info->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        SubspaceBasis ann = annihilator(a);
        auto chain = derived_powers(a);
        json powers = json::array();
        for (const auto& s : chain)
            powers.push_back(s.dim());
        json doc = {{"command", "info"},
                    {"dim", a.dim()},
                    {"annihilator_dim", ann.dim()},
                    {"power_chain_dims", powers},
                    {"nilpotency_index", nilpotency_index(a)},
                    {"jordan_identity", check_jordan_identity(a)},
                    {"anti_associative", check_anti_associative(a)},
                    {"admissible_anticommutator", is_jacobi_jordan_admissible(a)}};
        emit(as_json, doc, [&] {
            std::cout << "dim " << a.dim() << "\n"
                      << "dim Ann = " << ann.dim() << "\n"
                      << "power chain dims:";
            for (const auto& s : chain)
                std::cout << " " << s.dim();
            std::cout << "\nnilpotency index = " << nilpotency_index(a) << "\n"
                      << "Jordan identity: " << (check_jordan_identity(a) ? "yes" : "no") << "\n"
                      << "anti-associative: " << (check_anti_associative(a) ? "yes" : "no") << "\n";
        });
    });

    // cohomology
    auto* c_coh = add_algebra(add_common(app.add_subcommand("cohomology", "cocycles, coboundaries and the quotient")));
    c_coh->add_option("--coefficients", coeff_spec, "trivial | adjoint | rep:<file>");
    c_coh->add_option("--degree", degree, "cochain degree p")->required();
    c_coh->add_option("--class", cls, "full | symmetric | skew");
    c_coh->add_flag("--basis", emit_basis, "emit representative bases");
    c_coh->callback([&] {
        check_degree(degree);
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        Representation r = resolve_coefficients(coeff_spec, a);
        SymmetryClass sc;
        if (cls == "full")
            sc = SymmetryClass::full;
        else if (cls == "symmetric")
            sc = SymmetryClass::symmetric;
        else if (cls == "skew")
            sc = SymmetryClass::skew;
        else {
            std::cerr << "error: --class must be full, symmetric or skew\n";
            throw exit_with{2};
        }
        CohomologyResult res = cohomology(r, degree, sc);
        json doc = {{"command", "cohomology"},
                    {"degree", degree},
                    {"class", cls},
                    {"dim_cocycles", res.dim_cocycles},
                    {"dim_coboundaries", res.dim_coboundaries},
                    {"dim_cohomology", res.dim_cohomology}};
        std::size_t n = a.dim(), m = r.module_dim;
        if (emit_basis) {
            json reps = json::array();
            for (std::size_t j = 0; j < res.representatives.dim(); ++j)
                reps.push_back(cochain_terms_json(res.representatives.vectors.column(j), n, degree, m));
            doc["representatives"] = reps;
            json zs = json::array();
            for (std::size_t j = 0; j < res.cocycle_basis.dim(); ++j)
                zs.push_back(cochain_terms_json(res.cocycle_basis.vectors.column(j), n, degree, m));
            doc["cocycle_basis"] = zs;
        }
        emit(as_json, doc, [&] {
            std::cout << "dim Z = " << res.dim_cocycles << "\n"
                      << "dim B = " << res.dim_coboundaries << "\n";
            if (sc == SymmetryClass::skew)
                std::cout << "(skew class: no quotient taken)\n";
            else
                std::cout << "dim H = " << res.dim_cohomology << "\n";
            if (emit_basis) {
                for (std::size_t j = 0; j < res.cocycle_basis.dim(); ++j)
                    std::cout << "  z" << j + 1 << ": "
                              << cochain_terms_human(res.cocycle_basis.vectors.column(j), a.basis_names(),
                                                     degree, m)
                              << "\n";
                for (std::size_t j = 0; j < res.representatives.dim(); ++j)
                    std::cout << "  h" << j + 1 << ": "
                              << cochain_terms_human(res.representatives.vectors.column(j), a.basis_names(),
                                                     degree, m)
                              << "\n";
            }
        });
    });

    // derivations / antiderivations
    auto* c_der = add_algebra(add_common(app.add_subcommand("derivations", "the derivation algebra")));
    c_der->add_flag("--basis", emit_basis, "emit basis matrices");
    c_der->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        SubspaceBasis der = derivations(a);
        json doc = {{"command", "derivations"}, {"dim", der.dim()}};
        if (emit_basis)
            doc["basis"] = endo_basis_json(der, a.dim());
        emit(as_json, doc, [&] {
            std::cout << "dim Der = " << der.dim() << "\n";
            if (emit_basis)
                print_endo_basis(der, a.dim(), "D");
        });
    });

    auto* c_ader = add_algebra(add_common(app.add_subcommand("antiderivations", "antiderivations and the inner ones")));
    c_ader->add_flag("--basis", emit_basis, "emit basis matrices");
    c_ader->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        SubspaceBasis ader = antiderivations(a);
        SubspaceBasis inner = inner_antiderivations(a);
        json doc = {{"command", "antiderivations"},
                    {"dim_ADer", ader.dim()},
                    {"dim_IADer", inner.dim()},
                    {"dim_quotient", ader.dim() - inner.dim()}};
        if (emit_basis)
            doc["basis"] = endo_basis_json(ader, a.dim());
        emit(as_json, doc, [&] {
            std::cout << "dim ADer = " << ader.dim() << "\n"
                      << "dim IADer = " << inner.dim() << "\n"
                      << "dim ADer/IADer = " << ader.dim() - inner.dim() << "\n";
            if (emit_basis)
                print_endo_basis(ader, a.dim(), "A");
        });
    });

    // forms
    auto* c_forms = add_algebra(add_common(app.add_subcommand("forms", "invariant symmetric bilinear forms")));
    c_forms->add_option("--form", form_ref, "check this form for pseudo-Euclidean structure");
    c_forms->add_flag("--basis", emit_basis, "emit basis matrices");
    c_forms->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        SubspaceBasis f = invariant_forms(a);
        json doc = {{"command", "forms"}, {"dim_F", f.dim()}, {"b_p", b_p_dimension(a)}};
        if (!form_ref.empty()) {
            BilinearForm b = resolve_form(form_ref);
            doc["form_invariant_symmetric"] = is_invariant_symmetric(a, b);
            doc["form_pseudo_euclidean"] = check_pseudo_euclidean(a, b);
        }
        if (emit_basis)
            doc["basis"] = endo_basis_json(f, a.dim());
        emit(as_json, doc, [&] {
            std::cout << "dim F = " << f.dim() << "\n"
                      << "b_p = " << b_p_dimension(a) << "\n";
            if (doc.contains("form_pseudo_euclidean"))
                std::cout << "given form pseudo-Euclidean: "
                          << (doc["form_pseudo_euclidean"].get<bool>() ? "yes" : "no") << "\n";
            if (emit_basis)
                print_endo_basis(f, a.dim(), "phi");
        });
    });

    // exact-sequence
    auto* c_exact = add_algebra(add_common(app.add_subcommand("exact-sequence", "0 -> Der_a -> Der -> F -> Hs^3")));
    c_exact->add_option("--form", form_ref, "pseudo-Euclidean form reference")->required();
    c_exact->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        BilinearForm b = resolve_form(form_ref);
        ExactSequenceReport rep = exact_sequence_report(a, b);
        StructureReport st = structure_report(a, b);
        json doc = {{"command", "exact-sequence"},
                    {"dim_Der", rep.dim_Der},
                    {"dim_Der_a", rep.dim_Der_a},
                    {"dim_Der_s", st.dim_Der_s},
                    {"dim_F", rep.dim_F},
                    {"dim_Hs3", rep.dim_Hs3},
                    {"dim_im_nu", rep.dim_im_nu},
                    {"dim_ker_mu_bar", rep.dim_ker_mu_bar},
                    {"b_p", st.b_p},
                    {"bound_low", st.bound_low},
                    {"bound_high", st.bound_high},
                    {"exact_at_derivations", rep.exact_at_derivations},
                    {"exact_at_forms", rep.exact_at_forms}};
        emit(as_json, doc, [&] {
            std::cout << "dim Der = " << rep.dim_Der << ", dim Der_a = " << rep.dim_Der_a
                      << ", dim Der_s = " << st.dim_Der_s << "\n"
                      << "dim F = " << rep.dim_F << ", dim Hs^3 = " << rep.dim_Hs3 << "\n"
                      << "dim im nu = " << rep.dim_im_nu << ", dim ker mu_bar = " << rep.dim_ker_mu_bar
                      << "\n"
                      << "bounds: " << st.bound_low << " <= dim F <= " << st.bound_high << "\n"
                      << "exact at Der:   " << (rep.exact_at_derivations ? "true" : "false") << "\n"
                      << "exact at forms: " << (rep.exact_at_forms ? "true" : "false") << "\n";
        });
    });

    // extension
    auto* c_ext = app.add_subcommand("extension", "abelian extensions by a module");
    auto* c_ext_build = add_algebra(add_common(c_ext->add_subcommand("build", "emit the (twisted) semidirect product")));
    c_ext_build->add_option("--coefficients", coeff_spec, "trivial | adjoint | rep:<file>");
    c_ext_build->add_option("--cochain", cochain_ref, "symmetric 2-cocycle file (omit for the semidirect product)");
    c_ext_build->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        Representation r = resolve_coefficients(coeff_spec, a);
        std::optional<Cochain> c;
        if (!cochain_ref.empty())
            c = parse_cochain2(read_file(cochain_ref), a, r.module_dim);
        Algebra e = semidirect_product(r, c);
        bool valid = validate_jacobi_jordan(e).ok();
        json doc = {{"command", "extension build"},
                    {"dim", e.dim()},
                    {"valid", valid},
                    {"algebra", render_algebra(e)}};
        emit(as_json, doc, [&] {
            std::cout << render_algebra(e) << "valid Jacobi-Jordan: " << (valid ? "yes" : "no") << "\n";
        });
        if (!valid)
            throw exit_with{1};
    });
    auto* c_ext_check = add_algebra(add_common(c_ext->add_subcommand("check", "is the cochain a symmetric 2-cocycle?")));
    c_ext_check->add_option("--coefficients", coeff_spec, "trivial | adjoint | rep:<file>");
    c_ext_check->add_option("--cochain", cochain_ref, "cochain file")->required();
    c_ext_check->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        Representation r = resolve_coefficients(coeff_spec, a);
        Cochain c = parse_cochain2(read_file(cochain_ref), a, r.module_dim);
        bool z = is_cocycle(r, c);
        auto wit = is_coboundary(r, c);
        json doc = {{"command", "extension check"},
                    {"symmetric", c.is_symmetric()},
                    {"cocycle", z},
                    {"coboundary", wit.has_value()}};
        emit(as_json, doc, [&] {
            std::cout << "symmetric 2-cocycle: " << (z ? "yes" : "no") << "\n"
                      << "coboundary (trivial extension): " << (wit ? "yes" : "no") << "\n";
        });
        if (!z)
            throw exit_with{1};
    });
    auto* c_ext_equiv = add_algebra(add_common(c_ext->add_subcommand("equiv", "are two extensions equivalent?")));
    c_ext_equiv->add_option("--coefficients", coeff_spec, "trivial | adjoint | rep:<file>");
    c_ext_equiv->add_option("--cochain", cochain_ref, "first cochain file")->required();
    c_ext_equiv->add_option("--other", other_ref, "second cochain file")->required();
    c_ext_equiv->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        Representation r = resolve_coefficients(coeff_spec, a);
        Cochain c1 = parse_cochain2(read_file(cochain_ref), a, r.module_dim);
        Cochain c2 = parse_cochain2(read_file(other_ref), a, r.module_dim);
        bool eq = cohomologous(r, c1, c2);
        json doc = {{"command", "extension equiv"}, {"equivalent", eq}};
        emit(as_json, doc, [&] { std::cout << "equivalent: " << (eq ? "yes" : "no") << "\n"; });
    });

    // deform
    auto* c_def = app.add_subcommand("deform", "formal deformations of the product");
    auto* c_def_verify = add_common(c_def->add_subcommand("verify", "order-by-order deformation equations"));
    c_def_verify->add_option("--deformation", deformation_ref, "deformation file")->required();
    c_def_verify->add_option("--mode", mode, "truncated | polynomial");
    c_def_verify->add_option("--order", order_override, "check only terms up to this order");
    c_def_verify->callback([&] {
        TruncatedDeformation d = parse_deformation(read_file(deformation_ref), cli_resolver());
        require_jacobi_jordan(d.base);
        if (order_override >= 0 && static_cast<std::size_t>(order_override) < d.order())
            d.terms.resize(static_cast<std::size_t>(order_override));
        DeformationMode dm;
        if (mode == "truncated")
            dm = DeformationMode::truncated;
        else if (mode == "polynomial")
            dm = DeformationMode::polynomial;
        else {
            std::cerr << "error: --mode must be truncated or polynomial\n";
            throw exit_with{2};
        }
        ResidualReport rep = verify_deformation(d, dm);
        json doc = {{"command", "deform verify"},
                    {"order", d.order()},
                    {"mode", mode},
                    {"verdict", rep.verdict()},
                    {"violations", residuals_json(rep, false)}};
        emit(as_json, doc, [&] {
            std::cout << "order " << d.order() << ", mode " << mode << "\n"
                      << "deformation equations hold: " << (rep.verdict() ? "yes" : "no") << "\n";
            if (!rep.verdict())
                std::cout << rep.entries.size() << " violated basis triples\n";
        });
        if (!rep.verdict())
            throw exit_with{1};
    });
    auto* c_def_class = add_common(c_def->add_subcommand("class", "the infinitesimal cohomology class"));
    c_def_class->add_option("--deformation", deformation_ref, "deformation file")->required();
    c_def_class->callback([&] {
        TruncatedDeformation d = parse_deformation(read_file(deformation_ref), cli_resolver());
        require_jacobi_jordan(d.base);
        InfinitesimalClass ic = infinitesimal_class(d);
        std::size_t n = d.base.dim();
        json doc = {{"command", "deform class"},
                    {"cocycle", ic.is_cocycle},
                    {"zero_class", ic.zero_class},
                    {"representative", cochain_terms_json(ic.representative.coeffs, n, 2, n)}};
        emit(as_json, doc, [&] {
            std::cout << "mu_1 is a symmetric 2-cocycle: " << (ic.is_cocycle ? "yes" : "no") << "\n";
            if (ic.is_cocycle)
                std::cout << "class: "
                          << (ic.zero_class
                                  ? std::string("0")
                                  : cochain_terms_human(ic.representative.coeffs, d.base.basis_names(), 2, n))
                          << "\n";
        });
        if (!ic.is_cocycle)
            throw exit_with{1};
    });
    auto* c_def_equiv = add_common(c_def->add_subcommand("equiv", "first-order equivalence of two deformations"));
    c_def_equiv->add_option("--deformation", deformation_ref, "first deformation file")->required();
    c_def_equiv->add_option("--other", other_ref, "second deformation file")->required();
    c_def_equiv->callback([&] {
        TruncatedDeformation d1 = parse_deformation(read_file(deformation_ref), cli_resolver());
        TruncatedDeformation d2 = parse_deformation(read_file(other_ref), cli_resolver());
        require_jacobi_jordan(d1.base);
        auto phi = equivalent_order1(d1, d2);
        json doc = {{"command", "deform equiv"}, {"equivalent", phi.has_value()}};
        if (phi)
            doc["witness"] = matrix_json(*phi);
        emit(as_json, doc, [&] {
            std::cout << "equivalent at order 1: " << (phi ? "yes" : "no") << "\n";
            if (phi) {
                std::cout << "witness Phi_1:\n";
                print_matrix(*phi, "  ");
            }
        });
    });
    auto* c_def_spec = add_common(c_def->add_subcommand("specialize", "evaluate the parameter at a rational"));
    c_def_spec->add_option("--deformation", deformation_ref, "deformation file")->required();
    c_def_spec->add_option("--at", at_value, "parameter value (rational)")->required();
    c_def_spec->callback([&] {
        TruncatedDeformation d = parse_deformation(read_file(deformation_ref), cli_resolver());
        Algebra s = specialize(d, parse_rational(at_value));
        bool valid = validate_jacobi_jordan(s).ok();
        json doc = {{"command", "deform specialize"},
                    {"at", at_value},
                    {"valid", valid},
                    {"algebra", render_algebra(s)}};
        emit(as_json, doc, [&] {
            std::cout << render_algebra(s) << "valid Jacobi-Jordan: " << (valid ? "yes" : "no") << "\n";
        });
    });

    // hom-deform
    auto* c_hom = app.add_subcommand("hom-deform", "formal deformations of a homomorphism");
    auto* c_hom_verify = add_common(c_hom->add_subcommand("verify", "order-by-order hom equations"));
    c_hom_verify->add_option("--deformation", deformation_ref, "hom deformation file")->required();
    c_hom_verify->callback([&] {
        TruncatedHomDeformation h = parse_hom_deformation(read_file(deformation_ref), cli_resolver());
        require_jacobi_jordan(h.source);
        ResidualReport rep = verify_hom_deformation(h);
        json doc = {{"command", "hom-deform verify"},
                    {"order", h.order()},
                    {"verdict", rep.verdict()},
                    {"violations", residuals_json(rep, true)}};
        emit(as_json, doc, [&] {
            std::cout << "order " << h.order() << "\n"
                      << "hom deformation equations hold: " << (rep.verdict() ? "yes" : "no") << "\n";
        });
        if (!rep.verdict())
            throw exit_with{1};
    });
    auto* c_hom_class = add_common(c_hom->add_subcommand("class", "the infinitesimal class of Phi_1"));
    c_hom_class->add_option("--deformation", deformation_ref, "hom deformation file")->required();
    c_hom_class->callback([&] {
        TruncatedHomDeformation h = parse_hom_deformation(read_file(deformation_ref), cli_resolver());
        require_jacobi_jordan(h.source);
        HomInfinitesimalClass ic = hom_infinitesimal_class(h);
        json doc = {{"command", "hom-deform class"},
                    {"cocycle", ic.is_cocycle},
                    {"zero_class", ic.zero_class},
                    {"representative", matrix_json(ic.representative)}};
        emit(as_json, doc, [&] {
            std::cout << "Phi_1 is a 1-cocycle: " << (ic.is_cocycle ? "yes" : "no") << "\n";
            if (ic.is_cocycle) {
                std::cout << "class " << (ic.zero_class ? "is zero" : "representative:") << "\n";
                if (!ic.zero_class)
                    print_matrix(ic.representative, "  ");
            }
        });
        if (!ic.is_cocycle)
            throw exit_with{1};
    });

    // transport
    auto* c_tr = add_algebra(add_common(app.add_subcommand("transport", "structure constants in a new basis")));
    c_tr->add_option("--matrix", matrix_ref, "basis-change matrix file (columns are the new basis)")->required();
    c_tr->callback([&] {
        Algebra a = resolve_algebra(algebra_ref);
        require_jacobi_jordan(a);
        Matrix p = parse_matrix(read_file(matrix_ref));
        Algebra t = transport(a, p);
        json doc = {{"command", "transport"}, {"algebra", render_algebra(t)}};
        emit(as_json, doc, [&] { std::cout << render_algebra(t); });
    });

    // catalog
    auto* c_cat = app.add_subcommand("catalog", "built-in algebras");
    auto* c_cat_list = add_common(c_cat->add_subcommand("list", "list catalog entries"));
    c_cat_list->callback([&] {
        json arr = json::array();
        for (const auto& e : catalog())
            arr.push_back({{"name", e.name}, {"dim", e.algebra.dim()}, {"has_form", e.form.has_value()}});
        json doc = {{"command", "catalog list"}, {"entries", arr}};
        emit(as_json, doc, [&] {
            for (const auto& e : catalog())
                std::cout << e.name << " (dim " << e.algebra.dim() << (e.form ? ", with form " + e.name + ".B" : "")
                          << ")\n";
        });
    });
    auto* c_cat_show = add_common(c_cat->add_subcommand("show", "print one catalog entry"));
    c_cat_show->add_option("name", catalog_name, "entry name")->required();
    c_cat_show->callback([&] {
        const CatalogEntry& e = catalog_entry(catalog_name);
        json doc = {{"command", "catalog show"},
                    {"name", e.name},
                    {"note", e.note},
                    {"algebra", render_algebra(e.algebra)}};
        if (e.form)
            doc["form"] = matrix_json(*e.form);
        emit(as_json, doc, [&] {
            std::cout << "# " << e.note << "\n" << render_algebra(e.algebra);
            if (e.form) {
                std::cout << "form " << e.name << ".B:\n";
                print_matrix(*e.form, "  ");
            }
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const exit_with& e) {
        return e.code;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const bad_rational_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const unknown_catalog_entry& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const commutativity_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const non_nilpotent_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        // degree cap, degenerate forms, inadmissible targets, module axiom
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        // dimension mismatches, singular basis changes
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
