#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elco/errors.hpp"
#include "elco/term.hpp"
#include "elco/term_io.hpp"
#include "support.hpp"

using namespace elco;

namespace {

const SemType E = SemType::entity();
const SemType T = SemType::truth();
const SemType ET = SemType::arrow(E, T);

Term bill() { return mk_const("bill", E); }
Term hillary() { return mk_const("hillary", E); }
Term upset() { return mk_const("upset", ET); }
Term become() { return mk_const("become", SemType::arrow(ET, ET)); }

// become(upset)(bill)
Term become_upset_bill() {
  return mk_app(mk_app(become(), upset()), bill());
}

// Independent check that P really solves P(args...) = rhs: apply and
// normalize, nothing shared with the solver's internals.
bool solves(const Term& p, const std::vector<Term>& args, const Term& rhs) {
  return alpha_eq(beta_normalize(apply_all(p, args)), beta_normalize(rhs));
}

}  // namespace

TEST_CASE("semtype printing is right-associated and round-trips") {
  CHECK(ET.str() == "e->t");
  CHECK(SemType::arrow(ET, ET).str() == "(e->t)->e->t");
  CHECK(SemType::arrow(E, SemType::arrow(E, T)).str() == "e->e->t");
  for (const char* text : {"e", "t", "v", "e->t", "(e->t)->e->t",
                           "e->(e->t)", "((e->t)->t)->v"}) {
    SemType t = SemType::parse(text);
    CHECK(SemType::parse(t.str()) == t);
  }
  CHECK(SemType::parse("e->(e->t)") == SemType::parse("e->e->t"));
  CHECK_THROWS_AS(SemType::parse("e->"), SyntaxError);
}

TEST_CASE("beta_normalize: identity, two-step, already normal") {
  Term x = mk_var("v1", E);
  CHECK(alpha_eq(beta_normalize(mk_app(mk_abs(x, x), bill())), bill()));

  // (\P.\y.P y) upset bill -> upset bill
  Term p = mk_var("v2", ET);
  Term y = mk_var("v3", E);
  Term two = mk_app(mk_app(mk_abs(p, mk_abs(y, mk_app(p, y))), upset()), bill());
  CHECK(alpha_eq(beta_normalize(two), mk_app(upset(), bill())));

  Term normal = become_upset_bill();
  CHECK(alpha_eq(beta_normalize(normal), normal));
}

TEST_CASE("mk_app rejects ill-typed applications") {
  CHECK_THROWS_AS(mk_app(bill(), bill()), TypeClashError);
  CHECK_THROWS_AS(mk_app(upset(), upset()), TypeClashError);
}

TEST_CASE("alpha_eq") {
  Term f = mk_const("f", ET);
  Term g = mk_const("g", ET);
  Term x = mk_var("v1", E);
  Term y = mk_var("v2", E);
  CHECK(alpha_eq(mk_abs(x, mk_app(f, x)), mk_abs(y, mk_app(f, y))));
  CHECK_FALSE(alpha_eq(mk_abs(x, mk_app(f, x)), mk_abs(x, mk_app(g, x))));
  CHECK(alpha_eq(become_upset_bill(), become_upset_bill()));
  // Bound/free mix-ups must not be conflated.
  CHECK_FALSE(alpha_eq(mk_abs(x, x), mk_abs(x, mk_var("v9", E))));
}

TEST_CASE("abstract_over re-application oracle") {
  Term t = become_upset_bill();
  Term abs2 = abstract_over(t, {bill(), upset()});
  // Re-apply in reverse abstraction order and normalize.
  Term back = beta_normalize(apply_all(abs2, {upset(), bill()}));
  CHECK(alpha_eq(back, beta_normalize(t)));

  // Applying to the target clause's parallel elements yields the gapped
  // clause's reading.
  Term angry = mk_const("angry", ET);
  Term swapped = beta_normalize(apply_all(abs2, {angry, hillary()}));
  CHECK(alpha_eq(swapped, mk_app(mk_app(become(), angry), hillary())));
}

TEST_CASE("abstract_over: empty pivot list and vacuous abstraction") {
  Term t = become_upset_bill();
  CHECK(alpha_eq(abstract_over(t, {}), t));

  Term vac = abstract_over(mk_app(upset(), bill()), {hillary()});
  REQUIRE(is_abs(vac));
  CHECK(alpha_eq(vac->body, mk_app(upset(), bill())));
  CHECK(alpha_eq(beta_normalize(mk_app(vac, hillary())),
                 mk_app(upset(), bill())));
}

TEST_CASE("solve_anaphor: the property equation") {
  Term p_var = mk_var("v50", ET);

  // P(hillary) = become(upset)(hillary)
  Term rhs1 = mk_app(mk_app(become(), upset()), hillary());
  auto p1 = solve_anaphor(p_var, {hillary()}, rhs1);
  REQUIRE(p1.has_value());
  CHECK(solves(*p1, {hillary()}, rhs1));
  Term x = mk_var("v1", E);
  CHECK(alpha_eq(*p1, mk_abs(x, mk_app(mk_app(become(), upset()), x))));

  // P(icc) = reverse(decision)(icc)
  Term reverse = mk_const("reverse", SemType::arrow(E, ET));
  Term decision = mk_const("decision", E);
  Term icc = mk_const("icc", E);
  Term rhs2 = mk_app(mk_app(reverse, decision), icc);
  auto p2 = solve_anaphor(p_var, {icc}, rhs2);
  REQUIRE(p2.has_value());
  CHECK(solves(*p2, {icc}, rhs2));
  CHECK(alpha_eq(*p2, mk_abs(x, mk_app(mk_app(reverse, decision), x))));

  // Argument not occurring: constant solution.
  Term dishonest = mk_const("dishonest", ET);
  Term rhs3 = mk_app(dishonest, bill());
  auto p3 = solve_anaphor(p_var, {mk_const("x0", E)}, rhs3);
  REQUIRE(p3.has_value());
  CHECK(solves(*p3, {mk_const("x0", E)}, rhs3));
  REQUIRE(is_abs(*p3));
  CHECK(alpha_eq((*p3)->body, rhs3));
}

TEST_CASE("solve_anaphor: type mismatch yields no solution") {
  // Expected type e->t cannot host a two-argument solution.
  Term p_var = mk_var("v50", ET);
  Term support = mk_const("support", SemType::arrow(E, ET));
  Term rhs = mk_app(mk_app(support, bill()), hillary());
  auto sol = solve_anaphor(p_var, {bill(), hillary()}, rhs);
  CHECK_FALSE(sol.has_value());
}

TEST_CASE("term print/parse round-trips on normal forms") {
  std::map<std::string, SemType> consts{
      {"become", SemType::arrow(ET, ET)}, {"upset", ET}, {"bill", E}};
  Term t = become_upset_bill();
  CHECK(print_term(t) == "become upset bill");
  Term back = parse_term(print_term(t), consts);
  CHECK(alpha_eq(back, t));
  CHECK(print_term(back) == print_term(t));

  Term x = mk_var("v1", E);
  Term abs = mk_abs(x, mk_app(mk_app(become(), upset()), x));
  CHECK(print_term(abs) == "\\v1:e.become upset v1");
  CHECK(alpha_eq(parse_term(print_term(abs), consts), abs));

  CHECK_THROWS_AS(parse_term("become upset (", consts), SyntaxError);
  CHECK_THROWS_AS(parse_term("unknown", consts), SyntaxError);
}

TEST_CASE("property: normalization is idempotent and type-preserving") {
  testsup::Rng rng(7771);
  for (int i = 0; i < 500; ++i) {
    Term t = testsup::random_closed_term(rng);
    Term n1 = beta_normalize(t);
    CHECK(n1->type == t->type);
    CHECK(alpha_eq(beta_normalize(n1), n1));
  }
}

TEST_CASE("property: abstract/apply round-trip on closed subterm pivots") {
  testsup::Rng rng(4242);
  int done = 0;
  while (done < 300) {
    Term t = testsup::random_closed_term(rng);
    std::vector<Term> subs;
    testsup::closed_subterms(t, subs);
    if (subs.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    std::vector<Term> pivots{subs[pick(rng)]};
    if (subs.size() > 1) pivots.push_back(subs[pick(rng)]);

    Term abs = abstract_over(t, pivots);
    std::vector<Term> rev(pivots.rbegin(), pivots.rend());
    Term back = beta_normalize(apply_all(abs, rev));
    CHECK(alpha_eq(back, beta_normalize(t)));
    ++done;
  }
}

TEST_CASE("property: solver soundness against the substitution oracle") {
  testsup::Rng rng(90210);
  int done = 0;
  while (done < 300) {
    Term rhs = beta_normalize(testsup::random_closed_term(rng));
    std::vector<Term> subs;
    testsup::closed_subterms(rhs, subs);
    if (subs.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    Term arg = subs[pick(rng)];
    SemType pty = SemType::arrow(arg->type, rhs->type);
    auto sol = solve_anaphor(mk_var("v99", pty), {arg}, rhs);
    REQUIRE(sol.has_value());
    CHECK((*sol)->type == pty);
    CHECK(solves(*sol, {arg}, rhs));
    ++done;
  }
}
