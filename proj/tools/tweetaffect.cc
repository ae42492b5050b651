//
// Copyright 2026 The tweetaffect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <exception>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tweetaffect/augment.h"
#include "tweetaffect/config.h"
#include "tweetaffect/corpus.h"
#include "tweetaffect/defaults.h"
#include "tweetaffect/embeddings.h"
#include "tweetaffect/ensemble.h"
#include "tweetaffect/error.h"
#include "tweetaffect/eval.h"
#include "tweetaffect/experiment.h"
#include "tweetaffect/features.h"
#include "tweetaffect/lexicon_selection.h"
#include "tweetaffect/lexicons.h"
#include "tweetaffect/models.h"
#include "tweetaffect/report.h"
#include "tweetaffect/semisup.h"
#include "tweetaffect/synthetic.h"
#include "tweetaffect/text_io.h"

namespace ta = tweetaffect;
namespace fs = std::filesystem;

namespace {

// Flags shared by every command that featurizes tweets.
struct FeatureFlags {
  std::string embeddings;
  std::vector<std::string> lexicons;  // name=path or path

  void Register(CLI::App* app) {
    app->add_option("--embeddings", embeddings,
                    "Word embedding table (`word v1 ... vd` per line)");
    app->add_option("--lexicon", lexicons,
                    "Lexicon as NAME=PATH or PATH (name = file stem); repeatable");
  }

  std::vector<std::shared_ptr<const ta::Lexicon>> LoadLexicons() const {
    std::vector<std::shared_ptr<const ta::Lexicon>> out;
    for (const std::string& entry : lexicons) {
      const std::size_t eq = entry.find('=');
      const fs::path path = eq == std::string::npos ? entry : entry.substr(eq + 1);
      const std::string name =
          eq == std::string::npos ? path.stem().string() : entry.substr(0, eq);
      out.push_back(std::make_shared<const ta::Lexicon>(ta::LoadLexicon(path, name)));
    }
    return out;
  }

  ta::FeatureSpec Base() const {
    ta::FeatureSpec spec;
    if (!embeddings.empty()) {
      spec.embeddings =
          std::make_shared<const ta::EmbeddingTable>(ta::LoadEmbeddings(embeddings));
    }
    return spec;
  }

  ta::FeatureSpec Build() const {
    ta::FeatureSpec spec = Base();
    spec.lexicons = LoadLexicons();
    if (spec.Width() == 0) {
      throw ta::UsageError("no features: pass --embeddings and/or --lexicon");
    }
    return spec;
  }
};

// Model flags; unset values fall back to the shipped defaults of the task.
struct ModelFlags {
  std::string kind = "kernel_svr";
  std::optional<double> epsilon;
  std::optional<double> gamma;
  std::optional<double> cost;
  std::optional<std::string> layers;
  std::optional<double> dropout;
  std::optional<std::size_t> epochs;
  std::optional<std::size_t> batch_size;
  std::optional<double> learning_rate;
  std::uint64_t seed = 1;
  bool no_standardize = false;

  void Register(CLI::App* app) {
    app->add_option("--model", kind, "kernel_svr (svr) or feed_forward (ff)")
        ->capture_default_str();
    app->add_option("--epsilon", epsilon,
                    "Kernel regressor epsilon (default: task setting)");
    app->add_option("--gamma", gamma, "RBF gamma (default: 1 / feature width)");
    app->add_option("--cost", cost, "Kernel regressor box constraint C (default 1)");
    app->add_option("--layers", layers,
                    "Hidden layer sizes, e.g. 600,200 (default: task setting)");
    app->add_option("--dropout", dropout, "Feed-forward dropout (default: task setting)");
    app->add_option("--epochs", epochs, "Feed-forward epochs (default 100)");
    app->add_option("--batch-size", batch_size, "Feed-forward batch size (default 32)");
    app->add_option("--learning-rate", learning_rate, "Adam learning rate (default 0.001)");
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
    app->add_flag("--no-standardize", no_standardize,
                  "Use raw features instead of z-scores");
  }

  ta::PredictorSpec Spec(const std::string& task_id) const {
    const ta::TaskDefaults& defaults = ta::ShippedDefaults().Task(task_id);
    ta::PredictorSpec spec;
    spec.kind = ta::ParseModelKind(kind);
    if (spec.kind == ta::ModelKind::kExternal) {
      throw ta::UsageError("external models cannot be trained");
    }
    spec.epsilon = epsilon.value_or(defaults.svm_epsilon);
    if (gamma) spec.gamma = *gamma;
    if (cost) spec.cost = *cost;
    spec.layers = layers ? ta::ParseSizeList(*layers) : defaults.ff_layers;
    spec.dropout = dropout.value_or(defaults.ff_dropout);
    if (epochs) spec.epochs = *epochs;
    if (batch_size) spec.batch_size = *batch_size;
    if (learning_rate) spec.learning_rate = *learning_rate;
    spec.seed = seed;
    spec.standardize = !no_standardize;
    spec.Validate();
    return spec;
  }
};

void AddTask(CLI::App* app, std::string* task) {
  app->add_option("--task", *task,
                  "Task id: EI-Reg-<emotion>, EI-Oc-<emotion>, V-Reg or V-Oc")
      ->required();
}

void AddHeader(CLI::App* app, bool* header) {
  app->add_flag("--header", *header, "Skip the first line of dataset files");
}

void PrintReport(const ta::ScoreReport& report, bool json) {
  if (json) {
    std::cout << report.ToJson().dump(2) << "\n";
  } else {
    std::cout << report.ToText();
  }
}

// preprocess -----------------------------------------------------------------

struct PreprocessCmd {
  std::string input;
  std::string output;
  std::string format = "auto";
  bool header = false;

  void Register(CLI::App* app) {
    app->add_option("--input", input, "Raw text (one tweet per line) or dataset TSV")
        ->required();
    app->add_option("--output", output, "Canonical dataset TSV")->required();
    app->add_option("--format", format, "auto, tsv or text")
        ->check(CLI::IsMember({"auto", "tsv", "text"}))
        ->capture_default_str();
    AddHeader(app, &header);
  }

  int Run() const {
    const std::vector<std::string> lines = ta::text_io::ReadLines(input);
    bool tsv = format == "tsv";
    if (format == "auto") {
      for (const std::string& line : lines) {
        if (ta::text_io::Trim(line).empty()) continue;
        tsv = line.find('\t') != std::string::npos;
        break;
      }
    }
    std::string out;
    std::size_t count = 0;
    if (tsv) {
      for (const ta::TsvRow& row : ta::ReadDatasetRows(input, {header})) {
        out += row.id + "\t" + ta::Preprocess(row.text).JoinedTokens() + "\t" +
               row.dimension + "\t" + row.label + "\n";
        ++count;
      }
    } else {
      for (std::size_t i = header ? 1 : 0; i < lines.size(); ++i) {
        if (ta::text_io::Trim(lines[i]).empty()) continue;
        out += std::to_string(i + 1) + "\t" +
               ta::Preprocess(lines[i]).JoinedTokens() + "\t-\t-\n";
        ++count;
      }
    }
    ta::text_io::WriteFile(output, out);
    std::cerr << "preprocessed " << count << " rows\n";
    return 0;
  }
};

// train / predict / score ----------------------------------------------------

struct TrainCmd {
  std::string task;
  std::string train;
  std::string output;
  bool header = false;
  FeatureFlags features;
  ModelFlags model;

  void Register(CLI::App* app) {
    AddTask(app, &task);
    app->add_option("--train", train, "Training dataset TSV")->required();
    app->add_option("--output", output, "Model file (JSON)")->required();
    AddHeader(app, &header);
    features.Register(app);
    model.Register(app);
  }

  int Run() const {
    const ta::AffectTarget target = ta::AffectTarget::FromTaskId(task);
    const ta::Dataset data = ta::LoadDataset(train, target, {header});
    const ta::FeatureSpec spec = features.Build();
    const ta::PredictorSpec predictor = model.Spec(task);
    const ta::TrainedPredictor trained =
        ta::Train(predictor, spec.FeaturizeDataset(data), data.Labels());
    trained.Save(output);
    std::cout << predictor.Describe() << " on " << data.size() << " instances, "
              << spec.Width() << " features"
              << (trained.converged() ? "" : " (stopped before converging)") << "\n";
    return 0;
  }
};

struct PredictCmd {
  std::string task;
  std::string model;
  std::string input;
  std::string output;
  bool header = false;
  FeatureFlags features;

  void Register(CLI::App* app) {
    AddTask(app, &task);
    app->add_option("--model-file", model, "Model written by `train`")->required();
    app->add_option("--input", input, "Dataset TSV (labels are ignored)")->required();
    app->add_option("--output", output, "Predictions TSV (`id<TAB>value`)")->required();
    AddHeader(app, &header);
    features.Register(app);
  }

  int Run() const {
    const ta::AffectTarget target = ta::AffectTarget::FromTaskId(task);
    const ta::TrainedPredictor trained = ta::TrainedPredictor::Load(model);
    const ta::FeatureSpec spec = features.Build();
    std::vector<ta::Tweet> tweets;
    for (const ta::TsvRow& row : ta::ReadDatasetRows(input, {header})) {
      tweets.push_back(ta::Preprocess(row.text, row.id));
    }
    const ta::Matrix x = spec.FeaturizeAll(tweets);
    if (x.cols() != trained.feature_width()) {
      throw ta::UsageError("features have width " + std::to_string(x.cols()) +
                           " but the model expects " +
                           std::to_string(trained.feature_width()));
    }
    std::vector<std::string> ids;
    for (const ta::Tweet& t : tweets) ids.push_back(t.id);
    ta::SavePredictions(ta::Predict(trained, x, ids), output);
    (void)target;
    return 0;
  }
};

struct ScoreCmd {
  std::string task;
  std::string gold;
  std::vector<std::string> predictions;
  std::string metric = "pearson";
  bool header = false;
  bool json = false;

  void Register(CLI::App* app) {
    AddTask(app, &task);
    app->add_option("--gold", gold, "Gold dataset TSV")->required();
    app->add_option("--predictions", predictions,
                    "Prediction files as NAME=PATH or PATH; repeatable")
        ->required();
    app->add_option("--metric", metric, "pearson or spearman")
        ->check(CLI::IsMember({"pearson", "spearman"}))
        ->capture_default_str();
    AddHeader(app, &header);
    app->add_flag("--json", json, "Print the report as JSON");
  }

  int Run() const {
    const ta::Dataset data =
        ta::LoadDataset(gold, ta::AffectTarget::FromTaskId(task), {header});
    const std::vector<double> y = data.Labels();
    ta::ScoreReport report(metric);
    for (const std::string& entry : predictions) {
      const std::size_t eq = entry.find('=');
      const fs::path path = eq == std::string::npos ? entry : entry.substr(eq + 1);
      const std::string name =
          eq == std::string::npos ? path.stem().string() : entry.substr(0, eq);
      const ta::PredictionSet p =
          ta::AlignPredictions(ta::LoadPredictions(path), data.Ids());
      std::vector<double> clipped = p.values;
      for (double& v : clipped) v = std::clamp(v, 0.0, 1.0);
      const double score =
          metric == "pearson" ? ta::Pearson(clipped, y) : ta::Spearman(clipped, y);
      report.Add(ta::ScoreRow{task, name, score, std::nullopt});
    }
    PrintReport(report, json);
    return 0;
  }
};

// run ------------------------------------------------------------------------

struct RunCmd {
  std::string config;
  std::string output;
  bool json = false;
  bool quiet = false;

  void Register(CLI::App* app) {
    app->add_option("--config", config, "Experiment config file")->required();
    app->add_option("--output", output,
                    "Output directory (default: `output` next to the config)");
    app->add_flag("--json", json, "Print the report as JSON");
    app->add_flag("--quiet", quiet, "Do not echo the run log to stderr");
  }

  int Run() const {
    const ta::ExperimentConfig cfg = ta::ExperimentConfig::Load(config);
    const fs::path out =
        output.empty() ? fs::path(config).parent_path() / "output" : fs::path(output);
    const ta::ExperimentResult result = ta::RunExperiment(cfg, out);
    if (!quiet) {
      for (const std::string& line : result.log) std::cerr << line << "\n";
    }
    PrintReport(result.report, json);
    return 0;
  }
};

// augment --------------------------------------------------------------------

struct AugmentCmd {
  std::string task;
  std::string input;
  std::string output;
  std::string dictionary;
  std::string url;
  std::string source = "en";
  std::string target = "es";
  std::size_t workers = 1;
  std::string lexicon;
  std::string lexicon_output;
  bool header = false;

  void Register(CLI::App* app) {
    app->add_option("--task", task, "Task id of the dataset");
    app->add_option("--input", input, "Source-language dataset TSV");
    app->add_option("--output", output, "Translated dataset TSV");
    auto* dict = app->add_option("--dictionary", dictionary,
                                 "Offline word dictionary (`source<TAB>target`)");
    auto* remote = app->add_option("--url", url, "Remote translation endpoint (http)");
    dict->excludes(remote);
    app->add_option("--source", source, "Source language code")->capture_default_str();
    app->add_option("--target", target, "Target language code")->capture_default_str();
    app->add_option("--workers", workers, "Concurrent translation calls")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--lexicon", lexicon, "Lexicon to translate instead of a dataset");
    app->add_option("--lexicon-output", lexicon_output, "Translated lexicon file");
    AddHeader(app, &header);
  }

  std::unique_ptr<ta::Translator> MakeTranslator() const {
    if (!dictionary.empty()) {
      return std::make_unique<ta::DictionaryTranslator>(
          ta::DictionaryTranslator::Load(dictionary));
    }
    if (!url.empty()) return std::make_unique<ta::HttpTranslator>(url);
    throw ta::UsageError("pass --dictionary or --url");
  }

  int Run() const {
    const std::unique_ptr<ta::Translator> translator = MakeTranslator();
    const ta::TranslateOptions options{source, target, workers};
    if (!lexicon.empty()) {
      if (lexicon_output.empty()) throw ta::UsageError("--lexicon needs --lexicon-output");
      const ta::Lexicon lex = ta::LoadLexicon(lexicon, fs::path(lexicon).stem().string());
      const ta::LexiconTranslation result =
          ta::TranslateLexicon(lex, *translator, options);
      for (const std::string& f : result.failures) std::cerr << "skipped " << f << "\n";
      ta::SaveLexicon(result.lexicon, lexicon_output);
      std::cout << "translated " << result.lexicon.size() << " lexicon entries, skipped "
                << result.skipped << "\n";
      return 0;
    }
    if (task.empty() || input.empty() || output.empty()) {
      throw ta::UsageError("dataset translation needs --task, --input and --output");
    }
    const ta::Dataset data =
        ta::LoadDataset(input, ta::AffectTarget::FromTaskId(task), {header});
    const ta::TranslationOutcome result = ta::TranslateDataset(data, *translator, options);
    for (const std::string& f : result.failures) std::cerr << "skipped " << f << "\n";
    ta::SaveDataset(result.dataset, output);
    std::cout << "translated " << result.dataset.size() << " instances, skipped "
              << result.skipped << "\n";
    return 0;
  }
};

// selftrain ------------------------------------------------------------------

struct SelfTrainCmd {
  std::string task;
  std::string train;
  std::string silver;
  std::string words;
  std::string output;
  std::optional<std::size_t> k;
  std::optional<double> threshold;
  std::optional<std::size_t> max_added;
  bool header = false;
  FeatureFlags features;
  ModelFlags model;

  void Register(CLI::App* app) {
    AddTask(app, &task);
    app->add_option("--train", train, "Gold training dataset TSV")->required();
    app->add_option("--silver", silver, "Unlabeled tweets (one per line or TSV)")
        ->required();
    app->add_option("--words", words,
                    "Emotion word list (`word<TAB>emotion`) restricting the pool");
    app->add_option("--output", output, "Augmented training set TSV")->required();
    app->add_option("--agreement-models", k, "Number of agreeing models K (default 10)");
    app->add_option("--threshold", threshold,
                    "Maximum prediction spread (default: task setting)");
    app->add_option("--max-added", max_added,
                    "Maximum silver instances added (default: task setting)");
    AddHeader(app, &header);
    features.Register(app);
    model.Register(app);
  }

  int Run() const {
    const ta::AffectTarget target = ta::AffectTarget::FromTaskId(task);
    const ta::TaskDefaults& defaults = ta::ShippedDefaults().Task(task);
    ta::SelfTrainConfig cfg;
    if (defaults.selftrain_ff) {
      cfg.threshold = defaults.selftrain_ff->threshold;
      cfg.max_added = defaults.selftrain_ff->added;
    }
    if (k) cfg.k = *k;
    if (threshold) cfg.threshold = *threshold;
    if (max_added) cfg.max_added = *max_added;
    cfg.Validate();

    std::cout << "self-training " << task << ": threshold "
              << ta::text_io::FormatDouble(cfg.threshold) << ", max added "
              << cfg.max_added << ", agreement models " << cfg.k << "\n";
    if (defaults.selftrain_ff && defaults.selftrain_lstm) {
      std::cout << "task settings: feed_forward threshold "
                << ta::text_io::FormatDouble(defaults.selftrain_ff->threshold)
                << " added " << defaults.selftrain_ff->added << "; lstm threshold "
                << ta::text_io::FormatDouble(defaults.selftrain_lstm->threshold)
                << " added " << defaults.selftrain_lstm->added << "\n";
    }

    const ta::Dataset data = ta::LoadDataset(train, target, {header});
    std::vector<ta::Tweet> pool = ta::LoadTweets(silver);
    if (!words.empty()) {
      pool = ta::BuildSilverSets(ta::LoadEmotionWords(words), pool)[target.dimension()];
    }
    const ta::FeatureSpec spec = features.Build();
    const std::vector<ta::SilverCandidate> kept =
        ta::FilterSilver(pool, model.Spec(task), spec, data, cfg);
    ta::SaveDataset(ta::SelfTrain(data, kept), output);
    std::cout << "kept " << kept.size() << " of " << pool.size() << " silver tweets\n";
    return 0;
  }
};

// mine-words -----------------------------------------------------------------

struct MineWordsCmd {
  std::string target;
  std::string background;
  std::string output;
  std::size_t top = 100;

  void Register(CLI::App* app) {
    app->add_option("--target", target, "Emotion corpus (one tweet per line or TSV)")
        ->required();
    app->add_option("--background", background, "Background corpus")->required();
    app->add_option("--top", top, "Number of words to keep")->capture_default_str();
    app->add_option("--output", output, "Ranking TSV (default: stdout)");
  }

  int Run() const {
    const std::vector<ta::Tweet> t = ta::LoadTweets(target);
    const std::vector<ta::Tweet> b = ta::LoadTweets(background);
    const std::vector<ta::WordRatio> ranking = ta::MineIndicatorWords(t, b, top);
    if (!output.empty()) {
      ta::SaveWordRanking(ranking, output);
      return 0;
    }
    for (const ta::WordRatio& w : ranking) {
      std::cout << w.word << "\t" << ta::text_io::FormatDouble(w.ratio) << "\t"
                << w.target_count << "\t" << w.background_count << "\n";
    }
    return 0;
  }
};

// ensemble -------------------------------------------------------------------

struct EnsembleCmd {
  std::string task;
  std::string manifest;
  std::string gold;
  std::string output;
  double min_gain = 0.002;
  bool skip_and_continue = false;
  bool header = false;
  bool json = false;

  void Register(CLI::App* app) {
    AddTask(app, &task);
    app->add_option("--manifest", manifest,
                    "Members as `name<TAB>dev<TAB>test<TAB>dev score` rows")
        ->required();
    app->add_option("--gold", gold, "Dev gold dataset TSV")->required();
    app->add_option("--min-gain", min_gain, "Required improvement per removal")
        ->capture_default_str();
    app->add_flag("--skip-and-continue", skip_and_continue,
                  "Keep trying weaker members after a rejected removal");
    app->add_option("--output", output, "Directory for averaged predictions");
    AddHeader(app, &header);
    app->add_flag("--json", json, "Print the result as JSON");
  }

  int Run() const {
    const ta::Dataset dev =
        ta::LoadDataset(gold, ta::AffectTarget::FromTaskId(task), {header});
    std::vector<ta::EnsembleMember> members =
        ta::LoadMembers(ta::LoadManifest(manifest));
    for (ta::EnsembleMember& m : members) {
      m.dev = ta::AlignPredictions(m.dev, dev.Ids());
    }
    const ta::EnsembleResult result =
        ta::StepwisePrune(members, dev.Labels(), {min_gain, skip_and_continue});
    if (!output.empty()) {
      fs::create_directories(output);
      ta::SavePredictions(result.averaged_dev, fs::path(output) / "ensemble.dev.tsv");
      if (!result.averaged_test.values.empty()) {
        ta::SavePredictions(result.averaged_test, fs::path(output) / "ensemble.test.tsv");
      }
    }
    if (json) {
      nlohmann::json j;
      j["kept"] = result.kept_members;
      j["full_average_score"] = result.full_average_score;
      j["dev_score"] = result.dev_score;
      for (const ta::RemovalAttempt& a : result.removal_log) {
        j["removals"].push_back({{"member", a.name}, {"score", a.attempted_score},
                                 {"accepted", a.accepted}});
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << "average of all " << members.size() << " members: dev "
              << ta::text_io::FormatFixed(result.full_average_score, 4) << "\n";
    for (const ta::RemovalAttempt& a : result.removal_log) {
      std::cout << "remove " << a.name << ": dev " << ta::text_io::FormatFixed(a.attempted_score, 4)
                << (a.accepted ? " accepted" : " rejected") << "\n";
    }
    std::cout << "kept:";
    for (const std::string& name : result.kept_members) std::cout << " " << name;
    std::cout << "\ndev " << ta::text_io::FormatFixed(result.dev_score, 4) << "\n";
    return 0;
  }
};

// select-lexicons ------------------------------------------------------------

struct SelectLexiconsCmd {
  std::string task;
  std::string train;
  std::size_t folds = 10;
  bool header = false;
  FeatureFlags features;
  ModelFlags model;

  void Register(CLI::App* app) {
    AddTask(app, &task);
    app->add_option("--train", train, "Training dataset TSV")->required();
    app->add_option("--folds", folds, "Cross-validation folds")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();
    AddHeader(app, &header);
    features.Register(app);
    model.Register(app);
  }

  int Run() const {
    const ta::Dataset data =
        ta::LoadDataset(train, ta::AffectTarget::FromTaskId(task), {header});
    const std::vector<std::shared_ptr<const ta::Lexicon>> candidates =
        features.LoadLexicons();
    if (candidates.empty()) throw ta::UsageError("pass at least one --lexicon");
    const ta::SelectionResult result = ta::ForwardSelect(
        candidates, features.Base(), model.Spec(task), data, folds);
    std::cout << "base " << ta::text_io::FormatFixed(result.base_score, 4) << "\n";
    for (const ta::LexiconGain& g : result.individual) {
      std::cout << "candidate " << g.name << ": " << ta::text_io::FormatFixed(g.score, 4)
                << " (gain " << ta::text_io::FormatFixed(g.gain, 4) << ")\n";
    }
    for (const ta::SelectionStep& s : result.steps) {
      std::cout << "add " << s.name << ": " << ta::text_io::FormatFixed(s.score, 4)
                << (s.accepted ? " accepted" : " rejected") << "\n";
    }
    std::cout << "selected:";
    for (const std::string& name : result.SelectedNames()) std::cout << " " << name;
    std::cout << "\nscore " << ta::text_io::FormatFixed(result.final_score, 4) << "\n";
    return 0;
  }
};

// search-params --------------------------------------------------------------

struct SearchParamsCmd {
  std::string task;
  std::string train;
  std::vector<double> epsilons;
  std::vector<std::string> layer_options;
  std::size_t folds = 10;
  bool header = false;
  FeatureFlags features;
  ModelFlags model;

  void Register(CLI::App* app) {
    AddTask(app, &task);
    app->add_option("--train", train, "Training dataset TSV")->required();
    app->add_option("--epsilons", epsilons,
                    "Epsilon grid for kernel_svr (default 0.005 and 0.01..0.09)")
        ->delimiter(',');
    app->add_option("--layer-options", layer_options,
                    "Layer settings for feed_forward, e.g. 600,200 (repeatable)");
    app->add_option("--folds", folds, "Cross-validation folds")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();
    AddHeader(app, &header);
    features.Register(app);
    model.Register(app);
  }

  int Run() const {
    const ta::Dataset data =
        ta::LoadDataset(train, ta::AffectTarget::FromTaskId(task), {header});
    const ta::PredictorSpec base = model.Spec(task);
    std::vector<ta::PredictorSpec> specs;
    if (base.kind == ta::ModelKind::kKernelSvr) {
      for (double e : epsilons.empty() ? ta::DefaultEpsilonGrid() : epsilons) {
        ta::PredictorSpec s = base;
        s.epsilon = e;
        specs.push_back(s);
      }
    } else if (layer_options.empty()) {
      specs.push_back(base);
    } else {
      for (const std::string& l : layer_options) {
        ta::PredictorSpec s = base;
        s.layers = ta::ParseSizeList(l);
        specs.push_back(s);
      }
    }
    for (const ta::PredictorSpec& s : specs) s.Validate();
    const ta::GridResult grid = ta::GridSearch(specs, features.Build(), data, folds);
    for (const ta::GridRow& row : grid.rows) {
      std::cout << row.spec.Describe() << "\t"
                << ta::text_io::FormatFixed(row.cv.mean_score, 4) << "\n";
    }
    std::cout << "best: " << grid.best.Describe() << "\n";
    return 0;
  }
};

// synth / defaults -----------------------------------------------------------

struct SynthCmd {
  std::string output;
  ta::SyntheticOptions options;
  std::string emotion = "anger";
  std::uint64_t experiment_seed = 1;
  ta::SmokeSettings smoke;

  void Register(CLI::App* app) {
    app->add_option("--output", output, "Directory to write the task into")->required();
    app->add_option("--seed", options.seed, "Generator seed")->capture_default_str();
    app->add_option("--emotion", emotion, "anger, fear, joy or sadness")
        ->check(CLI::IsMember({"anger", "fear", "joy", "sadness"}))
        ->capture_default_str();
    app->add_option("--train-size", options.train_size)->capture_default_str();
    app->add_option("--dev-size", options.dev_size)->capture_default_str();
    app->add_option("--test-size", options.test_size)->capture_default_str();
    app->add_option("--foreign-size", options.foreign_size)->capture_default_str();
    app->add_option("--silver-size", options.silver_size)->capture_default_str();
    app->add_option("--experiment-seed", experiment_seed,
                    "Seed written into experiment.conf")
        ->capture_default_str();
    app->add_option("--label-noise", options.label_noise, "Label noise deviation")
        ->capture_default_str();
    app->add_option("--runs", smoke.runs, "Runs per variant in experiment.conf")
        ->capture_default_str();
    app->add_option("--agreement-models", smoke.agreement_models,
                    "Agreement models in experiment.conf")
        ->capture_default_str();
    app->add_option("--threshold", smoke.threshold, "Silver agreement threshold")
        ->capture_default_str();
    app->add_option("--max-added", smoke.max_added, "Maximum silver instances added")
        ->capture_default_str();
    app->add_option("--ff-layers", smoke.ff_layers, "Feed-forward hidden layers")
        ->capture_default_str();
    app->add_option("--ff-epochs", smoke.ff_epochs, "Feed-forward epochs")
        ->capture_default_str();
  }

  int Run() {
    options.emotion = ta::ParseDimension(emotion);
    const ta::SyntheticTask task = ta::GenerateSyntheticTask(options);
    fs::create_directories(output);
    ta::WriteSyntheticTask(task, output, experiment_seed, smoke);
    std::cout << "wrote synthetic " << task.train.target().TaskId() << " task to "
              << output << "\n";
    return 0;
  }
};

struct DefaultsCmd {
  std::string task;
  bool json = false;

  void Register(CLI::App* app) {
    app->add_option("--task", task, "Only this task");
    app->add_flag("--json", json, "Print as JSON");
  }

  int Run() const {
    const ta::DefaultsCatalog& catalog = ta::ShippedDefaults();
    std::vector<std::string> ids = task.empty() ? ta::AllTaskIds()
                                                : std::vector<std::string>{task};
    if (!json && task.empty()) {
      std::cout << ta::ShippedDefaultsText();
      return 0;
    }
    nlohmann::json out = nlohmann::json::object();
    for (const std::string& id : ids) {
      const ta::TaskDefaults& d = catalog.Task(id);
      nlohmann::json j;
      j["svm_epsilon"] = d.svm_epsilon;
      j["ff_layers"] = d.ff_layers;
      j["ff_dropout"] = d.ff_dropout;
      j["lstm"] = {{"layers", d.lstm.layers}, {"nodes", d.lstm.nodes},
                   {"dropout", d.lstm.dropout}, {"dense", d.lstm.dense}};
      if (d.selftrain_ff) {
        j["selftrain_ff"] = {{"threshold", d.selftrain_ff->threshold},
                             {"added", d.selftrain_ff->added}};
      }
      if (d.selftrain_lstm) {
        j["selftrain_lstm"] = {{"threshold", d.selftrain_lstm->threshold},
                               {"added", d.selftrain_lstm->added}};
      }
      out[id] = j;
    }
    if (json) {
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    for (const auto& [key, value] : ta::ShippedDefaultsConfig().entries()) {
      if (key.rfind(task + ".", 0) == 0) std::cout << key << " = " << value << "\n";
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affect intensity pipeline for tweets: features, regressors, "
               "translation augmentation, self-training and ensembles."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  PreprocessCmd preprocess;
  TrainCmd train;
  PredictCmd predict;
  ScoreCmd score;
  RunCmd run;
  AugmentCmd augment;
  SelfTrainCmd selftrain;
  MineWordsCmd mine_words;
  EnsembleCmd ensemble;
  SelectLexiconsCmd select_lexicons;
  SearchParamsCmd search_params;
  SynthCmd synth;
  DefaultsCmd defaults;

  std::function<int()> action;
  const auto add = [&](const char* name, const char* description, auto& cmd) {
    CLI::App* sub = app.add_subcommand(name, description);
    cmd.Register(sub);
    sub->callback([&action, &cmd] { action = [&cmd] { return cmd.Run(); }; });
  };
  add("preprocess", "Tokenize raw text or a dataset into canonical TSV", preprocess);
  add("train", "Train one model and save it", train);
  add("predict", "Predict a dataset with a saved model", predict);
  add("score", "Score prediction files against gold labels", score);
  add("run", "Run a full experiment from a config file", run);
  add("augment", "Translate a dataset or lexicon", augment);
  add("selftrain", "Add agreement-filtered silver data to a training set", selftrain);
  add("mine-words", "Rank indicator words of a corpus against a background",
      mine_words);
  add("ensemble", "Average members and prune the ensemble stepwise", ensemble);
  add("select-lexicons", "Forward lexicon selection by cross-validation",
      select_lexicons);
  add("search-params", "Cross-validated parameter search", search_params);
  add("synth", "Write a synthetic task with an experiment config", synth);
  add("defaults", "Print the shipped per-task settings", defaults);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ta::ErrorKind::kUsage);
  }

  try {
    return action();
  } catch (const ta::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return static_cast<int>(ta::ErrorKind::kUsage);
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ta::ErrorKind::kIo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ta::ErrorKind::kComputation);
  }
}
