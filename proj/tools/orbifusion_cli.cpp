#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orbi/error.hpp"
#include "orbi/json_io.hpp"

using namespace orbi;

namespace {

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read file: " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json &j) { std::cout << j.dump(2) << "\n"; }

GroupSpec group_from_arg(const std::string &arg) {
    // '[2,2]' is shorthand for {"type":"abelian","factors":[2,2]}
    json j = json::parse(arg);
    if (j.is_array()) {
        json wrapped = {{"type", "abelian"}, {"factors", j}};
        return group_from_json(wrapped);
    }
    return group_from_json(j);
}

void write_svg(const InterpolationReport &rep, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("IOError", {{"path", path}});
    out << svg_moduli(rep);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact-arithmetic toolkit for orbifold tensor category data"};
    app.require_subcommand(1);
    double tol = 1e-9;
    app.add_option("--tol", tol, "numeric tolerance (default 1e-9)");

    // cohomology
    std::string coh_group;
    int coh_degree = 2;
    std::int64_t coh_bound = 5000;
    bool coh_generators = false;
    auto *coh = app.add_subcommand("cohomology", "H^n(BG, C^x) by Smith normal form");
    coh->add_option("--group", coh_group, "group JSON or factor list")->required();
    coh->add_option("--degree", coh_degree, "degree n in {1,2,3}")->required();
    coh->add_option("--max-table", coh_bound, "bound on |G|^(n+1)");
    coh->add_flag("--generators", coh_generators, "include generator cochains");

    // trivialize
    std::string triv_file;
    auto *triv = app.add_subcommand("trivialize", "solve d kappa = theta");
    triv->add_option("file", triv_file, "cochain JSON file")->required();

    // twistedrep
    std::string tr_group, tr_theta_file;
    auto *tr = app.add_subcommand("twistedrep",
                                  "decompose the twisted regular representation");
    tr->add_option("--group", tr_group)->required();
    tr->add_option("--theta-file", tr_theta_file, "2-cocycle JSON");

    // fcat
    auto *fcat = app.add_subcommand("fcat", "fusion category data");
    fcat->require_subcommand(1);
    auto *fbuild = fcat->add_subcommand("build", "construct category data");
    fbuild->require_subcommand(1);
    std::string fp_group, fp_omega;
    std::string fout;
    auto *fpointed = fbuild->add_subcommand("pointed", "Vec^omega[G]");
    fpointed->add_option("--group", fp_group)->required();
    fpointed->add_option("--omega-file", fp_omega, "3-cocycle JSON")->required();
    fpointed->add_option("-o,--output", fout, "write category JSON to file");
    std::string ty_factors, ty_chi, ty_chi_file, ty_tau = "+";
    auto *fty = fbuild->add_subcommand("ty", "Tambara-Yamagami TY(A, chi, tau)");
    fty->add_option("--factors", ty_factors, "abelian invariant factors, e.g. [3]")->required();
    fty->add_option("--chi", ty_chi, "chi(1,1) as num/den for cyclic A");
    fty->add_option("--chi-file", ty_chi_file, "bicharacter JSON");
    fty->add_option("--tau", ty_tau, "+ or -");
    fty->add_option("-o,--output", fout, "write category JSON to file");
    std::string pent_file;
    auto *fpent = fcat->add_subcommand("pentagon", "brute-force pentagon check");
    fpent->add_option("file", pent_file, "category JSON file")->required();
    std::string verify_file;
    auto *fverify = fcat->add_subcommand("verify", "ring and rigidity checks");
    fverify->add_option("file", verify_file, "category or ring JSON file")->required();

    // quad
    auto *quad = app.add_subcommand("quad", "quadratic forms on finite abelian groups");
    quad->require_subcommand(1);
    std::string q_factors;
    auto *qenum = quad->add_subcommand("enumerate", "all quadratic forms");
    qenum->add_option("--factors", q_factors)->required();
    auto *qorb = quad->add_subcommand("orbits", "torsor orbits under bicharacters");
    qorb->add_option("--factors", q_factors)->required();
    std::string qr_chi, qr_factors;
    auto *qref = quad->add_subcommand("refine", "quadratic refinement of a bicharacter");
    qref->add_option("--factors", qr_factors)->required();
    qref->add_option("--chi", qr_chi, "chi(1,1) as num/den for cyclic groups")->required();

    // centre
    auto *centre = app.add_subcommand("centre", "Drinfel'd centre quadratic forms");
    centre->require_subcommand(1);
    std::int64_t c_k = 0, c_n = 2, c_a = 0, c_b = 0;
    auto *csu2 = centre->add_subcommand("su2", "Z(Vec^k[SU(2)])^x");
    csu2->add_option("--k", c_k)->required();
    auto *csun = centre->add_subcommand("sun", "Z(Vec^k[SU(n)])^x");
    csun->add_option("--n", c_n)->required();
    csun->add_option("--k", c_k)->required();
    auto *cspin = centre->add_subcommand("spin-odd", "Z(Vec^k[Spin(2n+1)])^x");
    cspin->add_option("--k", c_k)->required();
    auto *ccirc = centre->add_subcommand("circle", "finite part of Z(Vec^k[S^1])^x");
    ccirc->add_option("--k", c_k)->required();
    auto *cso4 = centre->add_subcommand("so4", "Spin(4) centre form for a p1 + b chi");
    cso4->add_option("--a", c_a)->required();
    cso4->add_option("--b", c_b)->required();
    std::string cz = "3";
    auto *cquot = centre->add_subcommand("quotient",
                                         "isotropic quotient Z'/Z of the so4 form");
    cquot->add_option("--a", c_a)->required();
    cquot->add_option("--b", c_b)->required();
    cquot->add_option("--z", cz, "generators of Z as element indices, comma separated");

    // interpolate
    auto *interp = app.add_subcommand("interpolate", "interpolated fusion categories");
    interp->require_subcommand(1);
    int i_k = 0;
    std::string i_svg;
    auto *isu2 = interp->add_subcommand("su2", "Vec^{-k}[SU(2)] x_{Vec[Z/2]} C(su2,k)");
    isu2->add_option("--k", i_k)->required();
    isu2->add_option("--svg", i_svg, "write moduli figure to file");
    std::int64_t t_p = 5, t_k = 5;
    std::string t_tau = "+", t_svg;
    auto *ity = interp->add_subcommand("ty", "interpolated Tambara-Yamagami over Z/p");
    ity->add_option("--p", t_p)->required();
    ity->add_option("--k", t_k)->required();
    ity->add_option("--tau", t_tau, "+ or -");
    ity->add_option("--svg", t_svg, "write moduli figure to file");

    // orbisheaf
    auto *osh = app.add_subcommand("orbisheaf", "twisted sheaves over [S/Gamma]");
    osh->require_subcommand(1);
    std::string sheaf_file;
    auto *ocheck = osh->add_subcommand("check", "validate a twisted sheaf");
    ocheck->add_option("file", sheaf_file)->required();
    int dn = 3;
    auto *odih = osh->add_subcommand("dihedral", "dihedral representation-ring model");
    odih->add_option("--n", dn)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*coh) {
            GroupSpec g = group_from_arg(coh_group);
            CohomologyGroup H = cohomology_group(g.group, coh_degree, coh_bound);
            json out = {{"invariant_factors", H.invariant_factors}};
            if (coh_generators) {
                json gens = json::array();
                for (const auto &c : H.generators) gens.push_back(cochain_to_json(c, false));
                out["generators"] = gens;
            }
            emit(out);
        } else if (*triv) {
            Cochain target = cochain_from_json(load_json_file(triv_file));
            auto kappa = solve_coboundary(target);
            json out = {{"trivializable", kappa.has_value()}};
            if (kappa) out["kappa"] = cochain_to_json(*kappa, false);
            emit(out);
        } else if (*tr) {
            GroupSpec g = group_from_arg(tr_group);
            Cochain theta = tr_theta_file.empty()
                                ? zero_cochain(g.group, 2)
                                : cochain_from_json(load_json_file(tr_theta_file), g.group);
            TwistedAlgebra A = twisted_algebra(g.group, theta);
            emit({{"order", g.group.order},
                  {"decomposition", decomposition_to_json(regular_decompose(A))}});
        } else if (*fpointed) {
            GroupSpec g = group_from_arg(fp_group);
            Cochain omega = cochain_from_json(load_json_file(fp_omega), g.group);
            FusionCategoryData C = build_pointed(g.group, omega);
            json out = category_to_json(C);
            if (!fout.empty()) {
                std::ofstream o(fout, std::ios::binary);
                o << out.dump(2) << "\n";
            } else {
                emit(out);
            }
        } else if (*fty) {
            AbelianGroup A(json::parse(ty_factors).get<std::vector<std::int64_t>>());
            Bicharacter chi;
            if (!ty_chi_file.empty()) {
                chi = bicharacter_from_json(load_json_file(ty_chi_file));
            } else if (!ty_chi.empty()) {
                if (A.rank() != 1) throw CLI::ValidationError("--chi requires cyclic A");
                Phase c11 = Phase::parse(ty_chi);
                const std::int64_t n = A.order();
                chi.group = A;
                chi.b.resize(n * n);
                for (std::int64_t x = 0; x < n; ++x)
                    for (std::int64_t y = 0; y < n; ++y)
                        chi.b[x * n + y] = c11.times(x * y);
            } else {
                throw CLI::ValidationError("need --chi or --chi-file");
            }
            FusionCategoryData C = build_ty(A, chi, ty_tau == "-" ? -1 : 1);
            json out = category_to_json(C);
            if (!fout.empty()) {
                std::ofstream o(fout, std::ios::binary);
                o << out.dump(2) << "\n";
            } else {
                emit(out);
            }
        } else if (*fpent) {
            FusionCategoryData C = category_from_json(load_json_file(pent_file));
            emit(pentagon_to_json(pentagon_check(C, tol)));
        } else if (*fverify) {
            json j = load_json_file(verify_file);
            FusionRing R = ring_from_json(j.contains("ring") ? j.at("ring") : j);
            RingReport ring = ring_verify(R);
            RingReport rigid = rigidity_check(R);
            emit({{"ring_ok", ring.ok()}, {"ring_failures", ring.failures},
                  {"rigidity_ok", rigid.ok()}, {"rigidity_failures", rigid.failures}});
        } else if (*qenum) {
            AbelianGroup H(json::parse(q_factors).get<std::vector<std::int64_t>>());
            auto forms = enumerate_quadratic_forms(H);
            json out = json::array();
            for (const auto &f : forms) {
                json fj = quadform_to_json(f);
                std::string label = braiding_label(f);
                if (!label.empty()) fj["label"] = label;
                out.push_back(fj);
            }
            emit({{"count", forms.size()}, {"forms", out}});
        } else if (*qorb) {
            AbelianGroup H(json::parse(q_factors).get<std::vector<std::int64_t>>());
            auto torsor = bichar_torsor_orbits(H);
            emit({{"form_count", torsor.forms.size()}, {"orbits", torsor.orbits}});
        } else if (*qref) {
            AbelianGroup H(json::parse(qr_factors).get<std::vector<std::int64_t>>());
            if (H.rank() != 1) throw CLI::ValidationError("--chi requires cyclic groups");
            Phase c11 = Phase::parse(qr_chi);
            const std::int64_t n = H.order();
            Bicharacter chi;
            chi.group = H;
            chi.b.resize(n * n);
            for (std::int64_t x = 0; x < n; ++x)
                for (std::int64_t y = 0; y < n; ++y) chi.b[x * n + y] = c11.times(x * y);
            auto eps = quadratic_refinement(chi);
            json out = {{"exists", eps.has_value()}};
            if (eps) {
                out["refinement"] = quadform_to_json(*eps);
                out["solutions"] = all_quadratic_refinements(chi).size();
            }
            emit(out);
        } else if (*csu2) {
            emit(braided_to_json(lie_centre_quadform(CentreFamily::SUn,
                                                     {.n = 2, .k = c_k})));
        } else if (*csun) {
            emit(braided_to_json(lie_centre_quadform(CentreFamily::SUn,
                                                     {.n = c_n, .k = c_k})));
        } else if (*cspin) {
            emit(braided_to_json(lie_centre_quadform(CentreFamily::SpinOdd, {.k = c_k})));
        } else if (*ccirc) {
            emit(braided_to_json(lie_centre_quadform(CentreFamily::Circle, {.k = c_k})));
        } else if (*cso4) {
            emit(braided_to_json(lie_centre_quadform(CentreFamily::SO4,
                                                     {.a = c_a, .b = c_b})));
        } else if (*cquot) {
            BraidedGroupData B = lie_centre_quadform(CentreFamily::SO4,
                                                     {.a = c_a, .b = c_b});
            std::vector<std::int64_t> Z;
            std::stringstream ss(cz);
            std::string item;
            while (std::getline(ss, item, ',')) Z.push_back(std::stoll(item));
            IsotropicQuotient q = isotropic_quotient(B, Z);
            emit({{"ambient", braided_to_json(B)},
                  {"zprime", q.zprime},
                  {"quotient", braided_to_json(q.data)}});
        } else if (*isu2) {
            InterpolationReport rep = interpolate_su2(i_k);
            if (!i_svg.empty()) write_svg(rep, i_svg);
            emit(report_to_json(rep));
        } else if (*ity) {
            TyInterpolation t = interpolated_ty(t_p, t_k, t_tau == "-" ? -1 : 1);
            if (!t.accepted) {
                std::cout << json({{"error", t.reason}}).dump(2) << "\n";
                return 1;
            }
            if (!t_svg.empty()) write_svg(t.report, t_svg);
            emit({{"accepted", true},
                  {"target", quadform_to_json(t.target)},
                  {"refinement", quadform_to_json(t.refinement)},
                  {"chi", bicharacter_to_json(t.chi)},
                  {"report", report_to_json(t.report)}});
        } else if (*ocheck) {
            TwistedSheaf F = sheaf_from_json(load_json_file(sheaf_file));
            auto v = sheaf_validate(F, tol);
            json out = {{"valid", v.ok}, {"max_deviation", v.max_deviation}};
            if (!v.ok) out["witness"] = v.witness;
            json supp = json::array();
            for (int s : support(F)) supp.push_back(s);
            out["support"] = supp;
            emit(out);
        } else if (*odih) {
            DihedralModel dm = dihedral_model(dn);
            MobileReport mr = mobile_identities_check(dm);
            json simples = json::array();
            for (int i = 0; i < dm.ring.rank; ++i)
                simples.push_back({{"vdim", dm.vdim[i]},
                                   {"support", dm.support_pt[i]},
                                   {"stabilizer_order", dm.stab_order[i]},
                                   {"dim", dm.dim[i].str()}});
            emit({{"n", dm.n},
                  {"ring", ring_to_json(dm.ring)},
                  {"simples", simples},
                  {"mobile_identities_ok", mr.ok},
                  {"failures", mr.failures}});
        }
    } catch (const DomainError &e) {
        json out = {{"error", e.code()}};
        if (!e.witness().is_null()) out["witness"] = e.witness();
        std::cout << out.dump(2) << "\n";
        return 1;
    } catch (const CLI::ValidationError &) {
        return 2;
    } catch (const json::exception &e) {
        std::cout << json({{"error", "BadJson"}, {"detail", e.what()}}).dump(2) << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cout << json({{"error", "Internal"}, {"detail", e.what()}}).dump(2) << "\n";
        return 2;
    }
    return 0;
}
