#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lietwist/verify.hpp"

namespace {

using namespace lietwist;

struct CliOptions {
  std::string algebra;
  int order = 4;
  int degree = 3;
  std::string form = "l";
  std::string format = "text";
  unsigned long seed = 0;
};

LieAlgebraDef resolve_algebra(const std::string& spec) {
  if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos)
    return load_algebra_file(spec);
  return catalog(spec);
}

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("algebra", opt.algebra, "catalog name (abelian(n), heisenberg3, su2, kappa(n)) or a JSON file path")
      ->required();
  cmd->add_option("--order", opt.order, "truncation order K")->check(CLI::PositiveNumber);
  cmd->add_option("--degree", opt.degree, "ideal-oracle test degree D")->check(CLI::PositiveNumber);
  cmd->add_option("--form", opt.form, "twist form: l, r or c")
      ->check(CLI::IsMember({"l", "r", "c"}));
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", opt.seed, "random seed for the fuzz sets");
}

int emit(const Report& rep, const std::string& format) {
  std::cout << (format == "json" ? rep.to_json() : rep.to_text());
  if (rep.all_passed()) return 0;
  std::cerr << "first failing section: " << rep.first_failure() << "\n";
  return 1;
}

int cmd_verify(const CliOptions& opt) {
  VerifyConfig cfg;
  cfg.order = opt.order;
  cfg.test_degree = opt.degree;
  cfg.seed = opt.seed;
  return emit(run_verify(resolve_algebra(opt.algebra), cfg), opt.format);
}

int cmd_star(const CliOptions& opt, const std::string& f_text, const std::string& g_text) {
  const LieAlgebraDef alg = resolve_algebra(opt.algebra);
  const RealizationContext ctx = build_context(alg, opt.order + opt.degree);
  const Polynomial f = Polynomial::parse(alg.dim(), f_text);
  const Polynomial g = Polynomial::parse(alg.dim(), g_text);

  const Polynomial oracle = ctx.pbw->star(f, g);
  const TwistForm tw = build_twist(twist_form_from_string(opt.form), ctx);
  const Polynomial twisted = twisted_star(tw, f, g, ctx);
  const bool agree = oracle == twisted;

  if (opt.format == "json") {
    nlohmann::json doc;
    doc["algebra"] = alg.name();
    doc["f"] = f.str();
    doc["g"] = g.str();
    doc["star_oracle"] = oracle.str();
    doc["twisted_star"] = twisted.str();
    doc["form"] = opt.form;
    doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << oracle.str() << "\n";
    if (!agree)
      std::cout << "twisted (" << opt.form << "): " << twisted.str() << "  DISAGREES\n";
  }
  return agree ? 0 : 1;
}

int cmd_coproduct(const CliOptions& opt, const std::string& generator) {
  const LieAlgebraDef alg = resolve_algebra(opt.algebra);
  const RealizationContext ctx = build_context(alg, opt.order + opt.degree);
  if (generator.size() < 2 || generator[0] != 'd')
    throw std::invalid_argument("generator must be d1..d" + std::to_string(alg.dim()));
  const int mu = std::stoi(generator.substr(1)) - 1;
  if (mu < 0 || mu >= alg.dim())
    throw std::invalid_argument("generator index out of range 1.." + std::to_string(alg.dim()));

  const TensorElement left = delta_deformed_left(ctx.momentum_gen(mu), ctx);
  const TensorElement right = delta_deformed_right(ctx.momentum_gen(mu), ctx);
  const bool agree = left.equal_up_to_total(right, ctx.order);
  const TensorElement diff = left - right;

  if (opt.format == "json") {
    nlohmann::json doc;
    doc["algebra"] = alg.name();
    doc["generator"] = generator;
    doc["delta_left"] = left.str();
    doc["delta_right"] = right.str();
    doc["difference"] = diff.str();
    doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "delta_left  = " << left.str() << "\n";
    std::cout << "delta_right = " << right.str() << "\n";
    std::cout << "difference  = " << diff.str() << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_twist(const CliOptions& opt) {
  const LieAlgebraDef alg = resolve_algebra(opt.algebra);
  const RealizationContext ctx = build_context(alg, opt.order + opt.degree);
  const TwistForm tw = build_twist(twist_form_from_string(opt.form), ctx);

  Report rep;
  rep.algebra = alg.name();
  rep.order = opt.order;
  rep.test_degree = opt.degree;
  rep.seed = opt.seed;
  rep.sections.push_back(section_twist_build(tw, ctx, opt.order));
  rep.sections.push_back(section_counitality(tw, ctx, opt.order));
  rep.sections.back().payload["representative"] = tw.rep.str();
  rep.sections.back().payload["inverse"] = tw.inverse().str();
  return emit(rep, opt.format);
}

int cmd_antipode(const CliOptions& opt) {
  const LieAlgebraDef alg = resolve_algebra(opt.algebra);
  const RealizationContext ctx = build_context(alg, opt.order + opt.degree);
  const TwistForm fl = build_twist(TwistFormTag::left, ctx);
  const TwistForm fr = build_twist(TwistFormTag::right, ctx);
  const TwistForm fc = build_twist(TwistFormTag::coproduct_series, ctx);

  Report rep;
  rep.algebra = alg.name();
  rep.order = opt.order;
  rep.test_degree = opt.degree;
  rep.seed = opt.seed;
  rep.sections.push_back(section_antipode(ctx, fl, fr, &fc, opt.order, opt.degree));
  rep.sections.push_back(section_conjecture(ctx, fl, opt.order));
  return emit(rep, opt.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf-algebroid twist data for linear Poisson structures"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string f_text, g_text, generator;

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common(verify, opt);

  auto* star = app.add_subcommand("star", "star product of two polynomials");
  add_common(star, opt);
  star->add_option("f", f_text, "left factor, e.g. \"x1\"")->required();
  star->add_option("g", g_text, "right factor, e.g. \"x2\"")->required();

  auto* coproduct = app.add_subcommand("coproduct", "deformed coproduct of a momentum generator");
  add_common(coproduct, opt);
  coproduct->add_option("generator", generator, "momentum generator, e.g. d3")->required();

  auto* twist = app.add_subcommand("twist", "build a twist and run its local checks");
  add_common(twist, opt);

  auto* antipode = app.add_subcommand("antipode", "antipode pipeline report");
  add_common(antipode, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(star)) return cmd_star(opt, f_text, g_text);
    if (app.got_subcommand(coproduct)) return cmd_coproduct(opt, generator);
    if (app.got_subcommand(twist)) return cmd_twist(opt);
    if (app.got_subcommand(antipode)) return cmd_antipode(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
