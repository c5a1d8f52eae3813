#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "turaev/builders.hpp"
#include "turaev/characters.hpp"
#include "turaev/crossed.hpp"
#include "turaev/io.hpp"

namespace turaev {

/// Exit code contract: 0 success, 1 usage or parse problem, 2 axiom
/// failure (a verified identity does not hold), 3 validation failure (the
/// input is not a twisted Frobenius algebra bundle).
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Parses "cyclic:<n>", "sym:<n>", or products joined with 'x', e.g.
/// "cyclic:2xcyclic:2".
inline FiniteGroup parse_group_spec(const std::string& spec) {
  auto parse_atom = [](const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("bad group spec: " + s);
    const std::string head = s.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad group spec: " + s);
    }
    if (head == "cyclic") return FiniteGroup::cyclic(n);
    if (head == "sym") return FiniteGroup::symmetric(n);
    throw ParseError("unknown group family: " + head);
  };
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = spec.find('x', start);
    if (x == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, x - start));
    start = x + 1;
  }
  FiniteGroup g = parse_atom(parts.at(0));
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = FiniteGroup::direct_product(g, parse_atom(parts[i]));
  return g;
}

namespace detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Fn>
int dispatch_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rationals) return fn(std::type_identity<Rational>{});
  PrimeField::set_modulus(spec.characteristic);
  return fn(std::type_identity<PrimeField>{});
}

/// Ambient coordinate carried by each quotient basis vector (the non-pivot
/// columns of the relation subspace).
template <Field K>
std::vector<std::size_t> quotient_basis_coords(const HochschildBundle<K>& HB, int g) {
  std::vector<std::size_t> coords;
  const Matrix<K>& s = HB.section(g);
  for (std::size_t j = 0; j < s.cols(); ++j)
    for (std::size_t i = 0; i < s.rows(); ++i)
      if (!s(i, j).is_zero()) {
        coords.push_back(i);
        break;
      }
  return coords;
}

template <Field K>
Json tensor_json(const Matrix<K>& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.cols(); ++j) row.push_back(t(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CommonOpts {
  std::string field_flag;
  bool json = false;
  bool skip_validate = false;
  std::uint64_t seed = kDefaultSeed;
};

}  // namespace detail

/// Runs the command-line interface on the given arguments (program name
/// excluded) and captures output. The binary in tools/ forwards to this.
inline CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out, err;

  CLI::App app{"exact construction and verification of (weak) crossed G-algebras\n"
               "on the equivariant Hochschild homology of twisted Frobenius algebras"};
  app.require_subcommand(1);

  detail::CommonOpts opt;
  app.add_option("--field", opt.field_flag, "coefficient field: q or gf:<p> (default: instance file field)");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for randomized checks (default 1729)");
  app.add_flag("--skip-validate", opt.skip_validate,
               "skip eager bundle validation (negative testing only)");

  std::string file_validate, file_hh0, file_verify, file_chars, file_structure;
  bool hh0_bases = false, chars_check = false;

  CLI::App* cmd_validate = app.add_subcommand("validate", "run all twisted-bundle checks");
  cmd_validate->add_option("file", file_validate, "instance file")->required();

  CLI::App* cmd_hh0 = app.add_subcommand("hh0", "per-grade homology dimensions");
  cmd_hh0->add_option("file", file_hh0, "instance file")->required();
  cmd_hh0->add_flag("--bases", hh0_bases, "also print quotient bases");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "build the crossed algebra and verify every axiom");
  cmd_verify->add_option("file", file_verify, "instance file")->required();

  CLI::App* cmd_chars = app.add_subcommand("characters", "print the 2-character table");
  cmd_chars->add_option("file", file_chars, "instance file")->required();
  cmd_chars->add_flag("--check", chars_check, "verify 2-class and modular invariance");

  CLI::App* cmd_structure =
      app.add_subcommand("structure", "dump graded product/coproduct tensors and counit");
  cmd_structure->add_option("file", file_structure, "instance file")->required();

  std::string build_family, build_group = "cyclic:2", build_gset = "point";
  std::string build_beta = "trivial", build_rep = "pauli", build_volume, build_out;
  bool build_sign = false;
  CLI::App* cmd_build = app.add_subcommand("build", "materialize a builder instance");
  cmd_build->add_option("family", build_family,
                        "group-algebra | function-algebra | matrix-projective | truncated-poly")
      ->required();
  cmd_build->add_option("--group", build_group, "group spec, e.g. cyclic:2, sym:3, cyclic:2xcyclic:2");
  cmd_build->add_option("--gset", build_gset, "function-algebra G-set: point | swap");
  cmd_build->add_option("--beta", build_beta, "function-algebra B-field: trivial | klein");
  cmd_build->add_option("--volume", build_volume, "function-algebra volumes, comma separated");
  cmd_build->add_option("--rep", build_rep, "matrix-projective family: pauli | trivial");
  cmd_build->add_flag("--sign-action", build_sign, "truncated-poly: act by x -> -x");
  cmd_build->add_option("--out", build_out, "output instance file")->required();

  {
    std::vector<const char*> argv;
    argv.push_back("turaev");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      res.exit_code = code == 0 ? 0 : 1;
      res.out = out.str();
      res.err = err.str();
      return res;
    }
  }

  auto load_text = [&](const std::string& path) {
    const std::string text = detail::slurp(path);
    return parse_instance_text(text);
  };
  auto resolve_field = [&](const InstanceText& t) {
    return opt.field_flag.empty() ? t.field : FieldSpec::parse(opt.field_flag);
  };

  try {
    if (*cmd_validate) {
      const InstanceText t = load_text(file_validate);
      const FieldSpec fs = resolve_field(t);
      res.exit_code = detail::dispatch_field(fs, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const TwistedBundle<K> B = instance_to_bundle<K>(t);
        const Report rep = validate_bundle(B);
        if (opt.json) {
          Json j{{"command", "validate"}, {"field", fs.name()}, {"report", report_to_json(rep)}};
          out << j.dump(2) << "\n";
        } else {
          out << rep.summary();
          out << (rep.all_pass() ? "all checks passed\n" : "validation failed\n");
        }
        return rep.all_pass() ? 0 : 3;
      });
    } else if (*cmd_hh0) {
      const InstanceText t = load_text(file_hh0);
      const FieldSpec fs = resolve_field(t);
      res.exit_code = detail::dispatch_field(fs, [&](auto tag) {
        using K = typename decltype(tag)::type;
        TwistedBundle<K> B = instance_to_bundle<K>(t);
        if (!opt.skip_validate) {
          const Report rep = validate_bundle(B);
          if (!rep.all_pass()) throw ValidationError("instance failed validation:\n" + rep.summary());
        }
        const HochschildBundle<K> HB(std::move(B));
        const int order = static_cast<int>(HB.group().order());
        if (opt.json) {
          Json dims = Json::array();
          for (int g = 0; g < order; ++g) dims.push_back(HB.grade_dim(g));
          Json j{{"command", "hh0"}, {"field", fs.name()}, {"dims", std::move(dims)},
                 {"total", HB.total_dim()}};
          if (hh0_bases) {
            Json bases = Json::array();
            for (int g = 0; g < order; ++g) bases.push_back(detail::quotient_basis_coords(HB, g));
            j["bases"] = std::move(bases);
          }
          out << j.dump(2) << "\n";
        } else {
          for (int g = 0; g < order; ++g) {
            out << "grade " << g << ": dim " << HB.grade_dim(g);
            if (hh0_bases) {
              out << "  basis coords:";
              for (std::size_t c : detail::quotient_basis_coords(HB, g)) out << " e_" << c;
            }
            out << "\n";
          }
          out << "total: " << HB.total_dim() << "\n";
        }
        return 0;
      });
    } else if (*cmd_verify) {
      const InstanceText t = load_text(file_verify);
      const FieldSpec fs = resolve_field(t);
      res.exit_code = detail::dispatch_field(fs, [&](auto tag) {
        using K = typename decltype(tag)::type;
        TwistedBundle<K> B = instance_to_bundle<K>(t);
        if (!opt.skip_validate) {
          const Report rep = validate_bundle(B);
          if (!rep.all_pass()) throw ValidationError("instance failed validation:\n" + rep.summary());
        }
        const CrossedAlgebra<K> CA{HochschildBundle<K>(std::move(B))};
        Report axioms = verify_well_defined(CA);
        axioms.merge(verify_weak_crossed(CA));
        const SeparabilityResult<K> sep = separability_unit(CA);
        const bool ok = axioms.all_pass() && sep.checks.all_pass();
        if (opt.json) {
          Json sj{{"unit_exists", sep.unit_exists},
                  {"diagnostic", sep.diagnostic},
                  {"checks", report_to_json(sep.checks)}};
          if (sep.unit_exists) {
            Json u = Json::array();
            for (const K& x : sep.unit) u.push_back(x.str());
            sj["unit"] = std::move(u);
          }
          Json j{{"command", "verify"},
                 {"field", fs.name()},
                 {"axioms", report_to_json(axioms)},
                 {"separability", std::move(sj)}};
          out << j.dump(2) << "\n";
        } else {
          out << axioms.summary();
          if (sep.unit_exists) {
            out << "unit: present in the identity grade [";
            for (std::size_t i = 0; i < sep.unit.size(); ++i)
              out << (i ? " " : "") << sep.unit[i].str();
            out << "]\n" << sep.checks.summary();
          } else {
            out << "unit: absent (" << sep.diagnostic << "); weak crossed structure only\n";
          }
          out << (ok ? "all axioms passed\n" : "axiom failure\n");
        }
        return ok ? 0 : 2;
      });
    } else if (*cmd_chars) {
      const InstanceText t = load_text(file_chars);
      const FieldSpec fs = resolve_field(t);
      res.exit_code = detail::dispatch_field(fs, [&](auto tag) {
        using K = typename decltype(tag)::type;
        TwistedBundle<K> B = instance_to_bundle<K>(t);
        if (!opt.skip_validate) {
          const Report rep = validate_bundle(B);
          if (!rep.all_pass()) throw ValidationError("instance failed validation:\n" + rep.summary());
        }
        const HochschildBundle<K> HB(std::move(B));
        const CharacterTable<K> table = two_character(HB);
        Report rep;
        if (chars_check) {
          rep = verify_two_class(table, HB.group());
          rep.merge(verify_modular(table, HB.group(), opt.seed));
        }
        if (opt.json) {
          Json pairs = Json::array();
          for (const auto& [pair, value] : table.entries)
            pairs.push_back(Json::array({pair.first, pair.second, value.str()}));
          Json j{{"command", "characters"}, {"field", fs.name()}, {"pairs", std::move(pairs)}};
          if (chars_check) {
            j["report"] = report_to_json(rep);
            j["seed"] = opt.seed;
          }
          out << j.dump(2) << "\n";
        } else {
          for (const auto& [pair, value] : table.entries)
            out << "chi(" << pair.first << ", " << pair.second << ") = " << value.str() << "\n";
          if (chars_check) out << rep.summary();
        }
        return (!chars_check || rep.all_pass()) ? 0 : 2;
      });
    } else if (*cmd_structure) {
      const InstanceText t = load_text(file_structure);
      const FieldSpec fs = resolve_field(t);
      res.exit_code = detail::dispatch_field(fs, [&](auto tag) {
        using K = typename decltype(tag)::type;
        TwistedBundle<K> B = instance_to_bundle<K>(t);
        if (!opt.skip_validate) {
          const Report rep = validate_bundle(B);
          if (!rep.all_pass()) throw ValidationError("instance failed validation:\n" + rep.summary());
        }
        const CrossedAlgebra<K> CA{HochschildBundle<K>(std::move(B))};
        const int order = static_cast<int>(CA.group().order());
        if (opt.json) {
          Json prods = Json::array(), cops = Json::array();
          for (int g = 0; g < order; ++g)
            for (int h = 0; h < order; ++h) {
              prods.push_back({{"g", g}, {"h", h}, {"tensor", detail::tensor_json(CA.product_tensor(g, h))}});
              cops.push_back({{"g", g}, {"h", h}, {"tensor", detail::tensor_json(CA.coproduct_tensor(g, h))}});
            }
          Json cu = Json::array();
          for (const K& x : CA.counit_vector()) cu.push_back(x.str());
          Json j{{"command", "structure"},
                 {"field", fs.name()},
                 {"product", std::move(prods)},
                 {"coproduct", std::move(cops)},
                 {"counit", std::move(cu)}};
          out << j.dump(2) << "\n";
        } else {
          for (int g = 0; g < order; ++g)
            for (int h = 0; h < order; ++h) {
              const Matrix<K>& pt = CA.product_tensor(g, h);
              out << "product (" << g << ", " << h << "): " << pt.rows() << " x " << pt.cols() << "\n";
              for (std::size_t i = 0; i < pt.rows(); ++i) {
                out << "  ";
                for (std::size_t j2 = 0; j2 < pt.cols(); ++j2)
                  out << (j2 ? " " : "") << pt(i, j2).str();
                out << "\n";
              }
            }
          for (int g = 0; g < order; ++g)
            for (int h = 0; h < order; ++h) {
              const Matrix<K>& ct = CA.coproduct_tensor(g, h);
              out << "coproduct (" << g << ", " << h << "): " << ct.rows() << " x " << ct.cols() << "\n";
              for (std::size_t i = 0; i < ct.rows(); ++i) {
                out << "  ";
                for (std::size_t j2 = 0; j2 < ct.cols(); ++j2)
                  out << (j2 ? " " : "") << ct(i, j2).str();
                out << "\n";
              }
            }
          out << "counit:";
          for (const K& x : CA.counit_vector()) out << " " << x.str();
          out << "\n";
        }
        return 0;
      });
    } else if (*cmd_build) {
      const FieldSpec fs =
          opt.field_flag.empty() ? FieldSpec{FieldSpec::Kind::rationals, 0}
                                 : FieldSpec::parse(opt.field_flag);
      res.exit_code = detail::dispatch_field(fs, [&](auto tag) {
        using K = typename decltype(tag)::type;
        TwistedBundle<K> B;
        if (build_family == "group-algebra") {
          B = group_algebra_bundle<K>(parse_group_spec(build_group));
        } else if (build_family == "function-algebra") {
          const FiniteGroup G = parse_group_spec(build_group);
          GSet X;
          if (build_gset == "point") {
            X = GSet::single_point(G.order());
          } else if (build_gset == "swap") {
            if (G.order() != 2) throw ParseError("--gset swap requires a group of order 2");
            X = GSet{2, {{0, 1}, {1, 0}}};
          } else {
            throw ParseError("unknown --gset: " + build_gset);
          }
          Vec<K> volume(X.points, K(1));
          if (!build_volume.empty()) {
            volume.clear();
            std::istringstream ss(build_volume);
            std::string tok;
            while (std::getline(ss, tok, ',')) volume.push_back(K::parse(tok));
          }
          std::vector<std::vector<Vec<K>>> beta;
          if (build_beta == "trivial") {
            beta = trivial_cocycle<K>(G.order(), X.points);
          } else if (build_beta == "klein") {
            if (G.order() != 4) throw ParseError("--beta klein requires cyclic:2xcyclic:2");
            beta = klein_sign_cocycle<K>(X.points);
          } else {
            throw ParseError("unknown --beta: " + build_beta);
          }
          B = function_algebra_bundle<K>(G, X, volume, beta);
        } else if (build_family == "matrix-projective") {
          if (build_rep == "pauli") {
            const FiniteGroup G = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                              FiniteGroup::cyclic(2));
            std::vector<Matrix<K>> P;
            for (int g = 0; g < 4; ++g) {
              Matrix<K> x = Matrix<K>::identity(2), z = Matrix<K>::identity(2);
              if (g / 2) {  // first component: X
                x = Matrix<K>(2, 2);
                x(0, 1) = x(1, 0) = K(1);
              }
              if (g % 2) z(1, 1) = -K(1);  // second component: Z
              P.push_back(x * z);
            }
            B = matrix_projective_bundle<K>(G, P);
          } else if (build_rep == "trivial") {
            const FiniteGroup G = parse_group_spec(build_group);
            B = matrix_projective_bundle<K>(
                G, std::vector<Matrix<K>>(G.order(), Matrix<K>::identity(2)));
          } else {
            throw ParseError("unknown --rep: " + build_rep);
          }
        } else if (build_family == "truncated-poly") {
          B = truncated_polynomial_bundle<K>(build_sign);
        } else {
          throw ParseError("unknown builder family: " + build_family);
        }
        const std::string text = serialize_instance(B);
        std::ofstream f(build_out, std::ios::binary);
        if (!f) throw Error("cannot write file: " + build_out);
        f << text;
        out << "wrote " << build_out << "\n";
        return 0;
      });
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    res.exit_code = 3;
  } catch (const NotFrobeniusError& e) {
    err << "validation error: " << e.what() << "\n";
    res.exit_code = 3;
  } catch (const NotInvertibleError& e) {
    err << "validation error: " << e.what() << "\n";
    res.exit_code = 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    res.exit_code = 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    res.exit_code = 1;
  }

  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace turaev
