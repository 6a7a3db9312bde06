#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "classbound/config.hpp"
#include "classbound/corpus.hpp"

namespace classbound {

struct LemmaSummary {
  uint64_t holds = 0;
  uint64_t fails = 0;
  uint64_t skips = 0;
  std::optional<double> min_slack;  // tightest margin among holding records
  friend bool operator==(const LemmaSummary&, const LemmaSummary&) = default;
};

struct CampaignReport {
  uint64_t seed = 0;
  std::string version;
  std::vector<LemmaCheckRecord> records;
  std::vector<SkipRecord> skips;
  std::map<std::string, LemmaSummary> summary;
  friend bool operator==(const CampaignReport&, const CampaignReport&) = default;

  uint64_t failed_count() const {
    uint64_t n = 0;
    for (const LemmaCheckRecord& r : records)
      if (!r.holds) ++n;
    return n;
  }
};

namespace detail {

inline void fold_into_summary(CampaignReport& rep) {
  rep.summary.clear();
  for (const LemmaCheckRecord& r : rep.records) {
    LemmaSummary& s = rep.summary[r.lemma];
    if (r.holds) {
      ++s.holds;
      if (!s.min_slack || r.slack < *s.min_slack) s.min_slack = r.slack;
    } else {
      ++s.fails;
    }
  }
  for (const SkipRecord& r : rep.skips) ++rep.summary[r.lemma].skips;
}

inline bool record_order(const LemmaCheckRecord& a, const LemmaCheckRecord& b) {
  return a.lemma != b.lemma ? a.lemma < b.lemma : a.instance < b.instance;
}

inline bool skip_order(const SkipRecord& a, const SkipRecord& b) {
  return a.lemma != b.lemma ? a.lemma < b.lemma : a.instance < b.instance;
}

}  // namespace detail

// Executes every suite-selected check of every corpus item. Items run
// concurrently; each worker appends its results under the merge lock and the
// final report is sorted into canonical (lemma, instance) order. A check that
// throws becomes a skip record carrying the reason, never an abort.
inline CampaignReport run_campaign(const std::vector<std::string>& suite,
                                   const std::vector<CorpusItem>& corpus, uint64_t seed) {
  CampaignReport rep;
  rep.seed = seed;
  rep.version = kVersion;
  std::set<std::string> selected(suite.begin(), suite.end());

  std::mutex merge;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      const CorpusItem& item = corpus[i];
      std::vector<LemmaCheckRecord> recs;
      std::vector<SkipRecord> skips;
      try {
        for (PlannedCheck& c : item.plan(seed)) {
          if (!selected.count(c.lemma)) continue;
          try {
            std::vector<LemmaCheckRecord> got = c.run();
            recs.insert(recs.end(), got.begin(), got.end());
          } catch (const std::exception& e) {
            skips.push_back({c.lemma, c.instance, e.what()});
          }
        }
      } catch (const std::exception& e) {
        skips.push_back({"corpus", item.name, e.what()});
      }
      std::lock_guard<std::mutex> hold(merge);
      rep.records.insert(rep.records.end(), recs.begin(), recs.end());
      rep.skips.insert(rep.skips.end(), skips.begin(), skips.end());
    }
  };

  std::size_t want = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  want = std::min(want, corpus.size());
  if (want <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < want; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(rep.records.begin(), rep.records.end(), detail::record_order);
  std::sort(rep.skips.begin(), rep.skips.end(), detail::skip_order);
  detail::fold_into_summary(rep);
  for (const std::string& id : suite)
    rep.summary.emplace(id, LemmaSummary{});  // keep zero-instance lemmas visible
  return rep;
}

inline nlohmann::ordered_json report_to_json(const CampaignReport& rep) {
  nlohmann::ordered_json j;
  j["meta"] = {{"seed", rep.seed}, {"version", rep.version}};
  j["records"] = nlohmann::ordered_json::array();
  for (const LemmaCheckRecord& r : rep.records) {
    nlohmann::ordered_json rj;
    rj["lemma"] = r.lemma;
    rj["instance"] = r.instance;
    rj["lhs"] = r.lhs;
    rj["rhs"] = r.rhs;
    rj["holds"] = r.holds;
    rj["slack"] = r.slack;
    rj["mode"] = r.mode;
    rj["extras"] = r.extras;
    j["records"].push_back(std::move(rj));
  }
  j["skips"] = nlohmann::ordered_json::array();
  for (const SkipRecord& r : rep.skips)
    j["skips"].push_back({{"lemma", r.lemma}, {"instance", r.instance}, {"reason", r.reason}});
  j["summary"] = nlohmann::ordered_json::object();
  for (const auto& [lemma, s] : rep.summary) {
    nlohmann::ordered_json sj;
    sj["holds"] = s.holds;
    sj["fails"] = s.fails;
    sj["skips"] = s.skips;
    if (s.min_slack)
      sj["min_slack"] = *s.min_slack;
    else
      sj["min_slack"] = nullptr;
    j["summary"][lemma] = std::move(sj);
  }
  return j;
}

inline CampaignReport parse_report_json(const nlohmann::json& j) {
  CampaignReport rep;
  rep.seed = j.at("meta").at("seed").get<uint64_t>();
  rep.version = j.at("meta").at("version").get<std::string>();
  for (const nlohmann::json& rj : j.at("records")) {
    LemmaCheckRecord r;
    r.lemma = rj.at("lemma").get<std::string>();
    r.instance = rj.at("instance").get<std::string>();
    r.lhs = rj.at("lhs").get<double>();
    r.rhs = rj.at("rhs").get<double>();
    r.holds = rj.at("holds").get<bool>();
    r.slack = rj.at("slack").get<double>();
    r.mode = rj.at("mode").get<std::string>();
    r.extras = rj.at("extras").get<std::map<std::string, double>>();
    rep.records.push_back(std::move(r));
  }
  for (const nlohmann::json& rj : j.at("skips"))
    rep.skips.push_back({rj.at("lemma").get<std::string>(), rj.at("instance").get<std::string>(),
                         rj.at("reason").get<std::string>()});
  for (const auto& [lemma, sj] : j.at("summary").items()) {
    LemmaSummary s;
    s.holds = sj.at("holds").get<uint64_t>();
    s.fails = sj.at("fails").get<uint64_t>();
    s.skips = sj.at("skips").get<uint64_t>();
    if (!sj.at("min_slack").is_null()) s.min_slack = sj.at("min_slack").get<double>();
    rep.summary[lemma] = s;
  }
  return rep;
}

namespace detail {

inline std::string csv_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  require(ec == std::errc{}, Errc::IoError, "number formatting failed");
  return std::string(buf, end);
}

}  // namespace detail

inline std::string report_to_csv(const CampaignReport& rep) {
  std::string out = "lemma,instance,lhs,rhs,holds,slack,mode\n";
  for (const LemmaCheckRecord& r : rep.records) {
    require(r.lemma.find(',') == std::string::npos && r.instance.find(',') == std::string::npos,
            Errc::IoError, "record names must not contain commas");
    out += r.lemma + "," + r.instance + "," + detail::csv_number(r.lhs) + "," +
           detail::csv_number(r.rhs) + "," + (r.holds ? "true" : "false") + "," +
           detail::csv_number(r.slack) + "," + r.mode + "\n";
  }
  return out;
}

enum class ReportFormat { Json, Csv };

inline void emit_report(const CampaignReport& rep, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), Errc::IoError, "cannot open report path " + path);
  if (format == ReportFormat::Json)
    out << report_to_json(rep).dump(2) << "\n";
  else
    out << report_to_csv(rep);
  require(static_cast<bool>(out), Errc::IoError, "failed writing report to " + path);
}

inline CampaignReport load_report(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Errc::IoError, "cannot open report " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::IoError, std::string("report is not valid JSON: ") + e.what());
  }
  return parse_report_json(j);
}

}  // namespace classbound
