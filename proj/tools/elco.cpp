#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "elco/errors.hpp"
#include "elco/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ellipsis and event reference under discourse inference"};
  app.require_subcommand(1);

  CLI::App* judge = app.add_subcommand(
      "judge", "judge a corpus of discourse items against gold annotations");
  std::string corpus, lexicon, kb;
  elco::RunOptions opts;
  std::string explain, relation;
  judge->add_option("--corpus", corpus, "corpus file (one JSON record per line)")
      ->required();
  judge->add_option("--lexicon", lexicon, "lexicon file")->required();
  judge->add_option("--kb", kb, "knowledge base file")->required();
  judge->add_option("--format", opts.format, "text or records")
      ->check(CLI::IsMember({"text", "records"}));
  judge->add_option("--explain", explain, "print the derivation trace for an item");
  judge->add_option("--relation", relation, "judge only the named relation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (!explain.empty()) opts.explain = explain;
  if (!relation.empty()) opts.relation = relation;

  try {
    elco::Report report = elco::run_corpus(corpus, lexicon, kb, opts);
    std::cout << report.render(opts);
    return report.exit_code();
  } catch (const elco::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
