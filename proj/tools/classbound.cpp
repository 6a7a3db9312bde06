#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classbound/campaign.hpp"
#include "classbound/group_spec.hpp"

using namespace classbound;

namespace {

// Lemma checks that make sense for any enumerated group: the quotient-style
// counting bounds over its normal subgroups, the core bound over a cyclic
// subgroup sample, and centralizer factorization over nested normal pairs.
template <class E>
void run_generic_lemma(const EnumeratedGroup<E>& g, const std::string& lemma,
                       std::vector<LemmaCheckRecord>& recs, std::vector<SkipRecord>& skips) {
  auto guarded = [&](const std::string& instance, auto&& f) {
    try {
      recs.push_back(f());
    } catch (const std::exception& e) {
      skips.push_back({lemma, instance, e.what()});
    }
  };

  if (lemma == "1.1" || lemma == "b3" || lemma == "index-bound") {
    std::vector<Subgroup<E>> normals = normal_subgroups(g);
    for (std::size_t i = 0; i < normals.size(); ++i) {
      std::string inst = "spec/" + lemma + "/n" + std::to_string(i);
      const Subgroup<E>& n = normals[i];
      guarded(inst, [&]() {
        if (lemma == "1.1") return verify_lemma_1_1(g, n, inst);
        if (lemma == "b3") return verify_lemma_b3(g, n, inst);
        return verify_index_bound(g, n, inst);
      });
    }
  } else if (lemma == "b1") {
    std::vector<Subgroup<E>> subs = subgroup_sample(g, SampleStrategy::AllCyclic, 0, 0, 0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::string inst = "spec/b1/cyc" + std::to_string(i);
      guarded(inst, [&]() { return verify_lemma_b1(g, subs[i], inst); });
    }
  } else if (lemma == "c1") {
    std::vector<Subgroup<E>> normals = normal_subgroups(g);
    uint32_t gi = g.generators().empty() ? g.identity_index() : g.index_of(g.generators()[0]);
    for (std::size_t a = 0; a < normals.size(); ++a)
      for (std::size_t b = 0; b < normals.size(); ++b) {
        if (a == b) continue;
        bool contained = true;
        for (uint32_t x : normals[b].members())
          if (!normals[a].contains_index(x)) {
            contained = false;
            break;
          }
        if (!contained) continue;
        std::string inst = "spec/c1/n" + std::to_string(a) + "-n" + std::to_string(b);
        guarded(inst, [&]() { return verify_lemma_c1(g, normals[a], normals[b], gi, inst); });
      }
  } else {
    skips.push_back({lemma, "spec", "lemma is not applicable to a bare group spec"});
  }
}

std::vector<std::string> parse_suite(const std::string& text) {
  if (text == "standard") return standard_suite();
  std::vector<std::string> ids;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) ids.push_back(cur);
  require(!ids.empty(), Errc::IoError, "suite selection is empty");
  return ids;
}

int finish(CampaignReport& rep, const std::string& report_path) {
  detail::fold_into_summary(rep);
  if (!report_path.empty()) emit_report(rep, ReportFormat::Json, report_path);
  for (const LemmaCheckRecord& r : rep.records)
    std::printf("%-12s %-44s %s  lhs=%.10g rhs=%.10g\n", r.lemma.c_str(), r.instance.c_str(),
                r.holds ? "holds" : "FAILS", r.lhs, r.rhs);
  for (const SkipRecord& r : rep.skips)
    std::printf("%-12s %-44s skip   %s\n", r.lemma.c_str(), r.instance.c_str(), r.reason.c_str());
  return rep.failed_count() == 0 ? 0 : 1;
}

int cmd_verify(const std::string& lemma, const std::string& spec_path, uint64_t seed,
               const std::string& report_path) {
  GroupSpec spec = load_group_spec(spec_path);
  CampaignReport rep;
  rep.seed = seed;
  rep.version = kVersion;

  auto guarded = [&](const std::string& instance, auto&& f) {
    try {
      for (LemmaCheckRecord& r : f()) rep.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      rep.skips.push_back({lemma, instance, e.what()});
    }
  };
  auto guarded_one = [&](const std::string& instance, auto&& f) {
    guarded(instance, [&]() { return std::vector<LemmaCheckRecord>{f()}; });
  };

  if (spec.perm) {
    if (lemma == "maroti") {
      std::size_t n = spec.perm->identity_element().degree();
      guarded_one("spec/maroti",
                  [&]() { return verify_maroti(*spec.perm, static_cast<int>(n), "spec/maroti"); });
    } else {
      run_generic_lemma(*spec.perm, lemma, rep.records, rep.skips);
    }
  } else {
    const MatrixGroup& m = *spec.matrix;
    if (lemma == "lema3") {
      guarded_one("spec/lema3", [&]() { return verify_lema3(m, "spec/lema3"); });
    } else if (lemma == "leme1") {
      uint32_t d1 = m.block_count > 1 ? m.block_dim : m.d;
      guarded_one("spec/leme1", [&]() { return verify_leme1(m, d1, "spec/leme1"); });
    } else if (lemma == "leme2") {
      guarded_one("spec/leme2", [&]() { return verify_leme2_blocks(m, "spec/leme2"); });
    } else if (lemma == "thmC") {
      guarded_one("spec/thmC", [&]() { return verify_theoremC_instance(m, "spec/thmC"); });
    } else if (lemma == "c4") {
      guarded("spec/c4", [&]() { return verify_lemc4(m, "spec/c4"); });
    } else if (lemma == "b2") {
      guarded_one("spec/b2", [&]() {
        return verify_lemma_b2(m, static_cast<double>(m.vec_count()), "spec/b2");
      });
    } else if (lemma == "affine-xcheck") {
      guarded_one("spec/affine-xcheck",
                  [&]() { return detail::affine_xcheck_record(m, "spec/affine-xcheck"); });
    } else {
      run_generic_lemma(m.group(), lemma, rep.records, rep.skips);
    }
  }
  return finish(rep, report_path);
}

int cmd_campaign(const std::string& suite_text, uint64_t seed, const std::string& format,
                 const std::string& out_path) {
  std::vector<std::string> suite = parse_suite(suite_text);
  CampaignReport rep = run_campaign(suite, corpus_standard(), seed);
  emit_report(rep, format == "csv" ? ReportFormat::Csv : ReportFormat::Json, out_path);
  uint64_t holds = 0, fails = 0;
  for (const auto& [lemma, s] : rep.summary) {
    holds += s.holds;
    fails += s.fails;
    std::printf("%-14s holds=%llu fails=%llu skips=%llu\n", lemma.c_str(),
                static_cast<unsigned long long>(s.holds), static_cast<unsigned long long>(s.fails),
                static_cast<unsigned long long>(s.skips));
  }
  std::printf("total: %llu holding, %llu failing, %zu skipped; report written to %s\n",
              static_cast<unsigned long long>(holds), static_cast<unsigned long long>(fails),
              rep.skips.size(), out_path.c_str());
  return fails == 0 ? 0 : 1;
}

int cmd_bounds_lemd4(uint32_t log_w, uint32_t n, const std::string& report_path) {
  CampaignReport rep;
  rep.seed = 0;
  rep.version = kVersion;
  auto [a, b] = check_lemd4_thresholds(log_w, n, 1, "bounds/w2^" + std::to_string(log_w));
  rep.records.push_back(a);
  rep.records.push_back(b);
  return finish(rep, report_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conjugacy-class counting bounds workbench"};
  app.require_subcommand(1);

  CLI::App* corpus = app.add_subcommand("corpus", "corpus inspection");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list", "list the standard corpus items");

  std::string lemma, spec_path, report_path;
  uint64_t seed = 42;
  CLI::App* verify = app.add_subcommand("verify", "run one lemma verifier against a group spec");
  verify->add_option("--lemma", lemma, "lemma identifier")->required();
  verify->add_option("--spec", spec_path, "group spec JSON file")->required();
  verify->add_option("--seed", seed, "seed for sampling verifiers");
  verify->add_option("--report", report_path, "write a JSON report here");

  std::string suite_text = "standard", format = "json", out_path;
  uint64_t campaign_seed = 42;
  CLI::App* campaign = app.add_subcommand("campaign", "run a verifier suite over the corpus");
  campaign->add_option("--suite", suite_text, "suite name or comma-separated lemma ids");
  campaign->add_option("--seed", campaign_seed, "campaign seed");
  campaign->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  campaign->add_option("--out", out_path, "report output path")->required();

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form threshold checks");
  bounds->require_subcommand(1);
  uint32_t log_w = 47, nn = 2;
  std::string bounds_report;
  CLI::App* lemd4 = bounds->add_subcommand("lemd4", "evaluate the induction thresholds");
  lemd4->add_option("--logW", log_w, "log2 of the module size")->required();
  lemd4->add_option("--n", nn, "number of blocks")->required();
  lemd4->add_option("--report", bounds_report, "write a JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus->parsed()) {
      for (const CorpusItem& item : corpus_standard()) {
        std::string exp;
        for (const auto& [k, v] : item.expected)
          exp += (exp.empty() ? "  [" : ", ") + k + "=" + detail::csv_number(v);
        if (!exp.empty()) exp += "]";
        std::printf("%-22s %s%s\n", item.name.c_str(), item.summary.c_str(), exp.c_str());
      }
      return 0;
    }
    if (verify->parsed()) return cmd_verify(lemma, spec_path, seed, report_path);
    if (campaign->parsed()) return cmd_campaign(suite_text, campaign_seed, format, out_path);
    if (bounds->parsed()) return cmd_bounds_lemd4(log_w, nn, bounds_report);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
