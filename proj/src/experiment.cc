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

#include "tweetaffect/experiment.h"

#include <memory>
#include <set>

#include "tweetaffect/augment.h"
#include "tweetaffect/defaults.h"
#include "tweetaffect/embeddings.h"
#include "tweetaffect/error.h"
#include "tweetaffect/eval.h"
#include "tweetaffect/features.h"
#include "tweetaffect/lexicon_selection.h"
#include "tweetaffect/lexicons.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace {

namespace fs = std::filesystem;

// Records which keys were read so that unknown (misspelled) keys can be
// reported.
class KeyReader {
 public:
  explicit KeyReader(const Config& config) : config_(config) {}

  bool Has(const std::string& key) {
    used_.insert(key);
    return config_.Has(key);
  }
  std::string String(const std::string& key) {
    used_.insert(key);
    return config_.GetString(key);
  }
  std::string String(const std::string& key, std::string fallback) {
    used_.insert(key);
    return config_.GetString(key, std::move(fallback));
  }
  double Double(const std::string& key, double fallback) {
    used_.insert(key);
    return config_.GetDouble(key, fallback);
  }
  long long Int(const std::string& key, long long fallback) {
    used_.insert(key);
    const long long value = config_.GetInt(key, fallback);
    if (value < 0) throw UsageError("config key '" + key + "' must be >= 0");
    return value;
  }
  bool Bool(const std::string& key, bool fallback) {
    used_.insert(key);
    return config_.GetBool(key, fallback);
  }
  std::vector<std::size_t> SizeList(const std::string& key,
                                    std::vector<std::size_t> fallback) {
    used_.insert(key);
    return config_.Has(key) ? config_.GetSizeList(key) : fallback;
  }
  std::vector<std::string> List(const std::string& key) {
    used_.insert(key);
    return config_.Has(key) ? config_.GetList(key) : std::vector<std::string>{};
  }
  fs::path Path(const std::string& key, const fs::path& base) {
    used_.insert(key);
    const std::optional<std::string> value = config_.Find(key);
    if (!value || value->empty()) return {};
    const fs::path p(*value);
    return p.is_absolute() ? p : base / p;
  }

  void RejectUnknown() const {
    std::string unknown;
    for (const auto& [key, value] : config_.entries()) {
      if (!used_.contains(key)) unknown += "\n  " + key;
    }
    if (!unknown.empty()) throw UsageError("unknown config keys:" + unknown);
  }

 private:
  const Config& config_;
  std::set<std::string> used_;
};

double ScoreOrZero(std::span<const double> predicted,
                   std::span<const double> gold, const std::string& what,
                   std::vector<std::string>* log) {
  try {
    return Pearson(predicted, gold);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kComputation) throw;
    log->push_back("warning: " + what + ": " + e.what() + "; scored as 0");
    return 0.0;
  }
}

std::unique_ptr<Translator> MakeTranslator(const ExperimentConfig& config) {
  if (!config.dictionary.empty()) {
    return std::make_unique<DictionaryTranslator>(
        DictionaryTranslator::Load(config.dictionary));
  }
  return std::make_unique<HttpTranslator>(config.translator_url);
}

}  // namespace

std::string_view DataFlavorName(DataFlavor flavor) {
  switch (flavor) {
    case DataFlavor::kRegular:
      return "regular";
    case DataFlavor::kTranslated:
      return "translated";
    case DataFlavor::kSilver:
      return "silver";
  }
  return "regular";
}

DataFlavor ParseDataFlavor(std::string_view name) {
  if (name == "regular" || name == "r") return DataFlavor::kRegular;
  if (name == "translated" || name == "t") return DataFlavor::kTranslated;
  if (name == "silver" || name == "s") return DataFlavor::kSilver;
  throw UsageError("unknown training data flavor '" + std::string(name) + "'");
}

ExperimentConfig ExperimentConfig::FromConfig(const Config& config,
                                              const fs::path& base_dir) {
  KeyReader r(config);
  ExperimentConfig c;
  c.task_id = r.String("experiment.task");
  const AffectTarget target = AffectTarget::FromTaskId(c.task_id);
  c.task_id = target.TaskId();
  const TaskDefaults& defaults = ShippedDefaults().Task(c.task_id);
  c.seed = static_cast<std::uint64_t>(r.Int("experiment.seed", 1));
  const auto default_runs =
      static_cast<std::size_t>(r.Int("experiment.runs", 10));

  c.train = r.Path("data.train", base_dir);
  c.dev = r.Path("data.dev", base_dir);
  c.test = r.Path("data.test", base_dir);
  c.foreign = r.Path("data.foreign", base_dir);
  c.silver = r.Path("data.silver", base_dir);
  c.header = r.Bool("data.header", false);
  if (c.train.empty()) throw UsageError("missing config key 'data.train'");
  if (c.dev.empty()) throw UsageError("missing config key 'data.dev'");

  c.embeddings = r.Path("features.embeddings", base_dir);
  for (const std::string& name : r.List("features.lexicons")) {
    const fs::path path = r.Path("lexicon." + name + ".path", base_dir);
    if (path.empty()) {
      throw UsageError("missing config key 'lexicon." + name + ".path'");
    }
    c.lexicons.emplace_back(name, path);
  }
  c.select_lexicons = r.Bool("features.select_lexicons", false);
  c.selection_folds =
      static_cast<std::size_t>(r.Int("features.selection_folds", 5));
  if (c.embeddings.empty() && c.lexicons.empty()) {
    throw UsageError("no features configured: set features.embeddings and/or "
                     "features.lexicons");
  }

  c.dictionary = r.Path("translate.dictionary", base_dir);
  c.translator_url = r.String("translate.url", "");
  c.source_language = r.String("translate.source", "en");
  c.target_language = r.String("translate.target", "es");

  const std::optional<SelfTrainSettings> table = defaults.selftrain_ff;
  c.selftrain.k = static_cast<std::size_t>(r.Int("selftrain.k", 10));
  c.selftrain.threshold =
      r.Double("selftrain.threshold", table ? table->threshold : 0.1);
  c.selftrain.max_added = static_cast<std::size_t>(
      r.Int("selftrain.max_added", table ? static_cast<long long>(table->added)
                                         : 2500));
  c.emotion_words = r.Path("selftrain.words", base_dir);

  c.ensemble.min_gain = r.Double("ensemble.min_gain", 0.002);
  c.ensemble.skip_and_continue = r.Bool("ensemble.skip_and_continue", false);

  std::set<std::string> names;
  for (const std::string& name : r.List("experiment.variants")) {
    if (!names.insert(name).second) {
      throw UsageError("duplicate variant name '" + name + "'");
    }
    const std::string p = "variant." + name + ".";
    VariantConfig v;
    v.name = name;
    v.data = ParseDataFlavor(r.String(p + "data", "regular"));
    PredictorSpec& s = v.spec;
    s.kind = ParseModelKind(r.String(p + "model"));
    s.seed = c.seed;
    s.standardize = r.Bool(p + "standardize", true);
    s.epsilon = r.Double(p + "epsilon", defaults.svm_epsilon);
    s.gamma = r.Double(p + "gamma", 0.0);
    s.cost = r.Double(p + "cost", 1.0);
    s.tolerance = r.Double(p + "tolerance", 1e-4);
    s.max_passes = static_cast<long>(r.Int(p + "max_passes", 10000));
    s.layers = r.SizeList(p + "layers", defaults.ff_layers);
    s.dropout = r.Double(p + "dropout", defaults.ff_dropout);
    s.epochs = static_cast<std::size_t>(r.Int(p + "epochs", 100));
    s.batch_size = static_cast<std::size_t>(r.Int(p + "batch_size", 32));
    s.learning_rate = r.Double(p + "learning_rate", 1e-3);
    s.lr_decay_every = static_cast<std::size_t>(r.Int(p + "lr_decay_every", 50));
    s.lr_decay_factor = r.Double(p + "lr_decay_factor", 0.5);
    v.runs = static_cast<std::size_t>(r.Int(p + "runs", default_runs));
    v.dev_predictions = r.Path(p + "dev_predictions", base_dir);
    v.test_predictions = r.Path(p + "test_predictions", base_dir);
    if (s.kind == ModelKind::kExternal) {
      if (v.dev_predictions.empty()) {
        throw UsageError("external variant '" + name + "' needs dev_predictions");
      }
      s.predictions_path = v.dev_predictions.generic_string();
    }
    if (v.runs == 0) throw UsageError("variant '" + name + "': runs must be >= 1");
    try {
      s.Validate();
    } catch (const Error& e) {
      throw UsageError("variant '" + name + "': " + e.what());
    }
    c.variants.push_back(std::move(v));
  }
  if (c.variants.empty()) throw UsageError("experiment.variants is empty");

  bool wants_translation = false;
  for (const VariantConfig& v : c.variants) {
    if (v.spec.kind == ModelKind::kExternal) continue;
    if (v.data == DataFlavor::kTranslated) wants_translation = true;
    if (v.data == DataFlavor::kSilver) {
      if (target.dimension() == Dimension::kValence) {
        throw UsageError("self-training applies to emotion tasks only");
      }
      if (c.silver.empty()) {
        throw UsageError("variant '" + v.name + "' needs data.silver");
      }
      c.selftrain.Validate();
    }
  }
  if (wants_translation) {
    if (c.foreign.empty()) throw UsageError("translated variants need data.foreign");
    if (c.dictionary.empty() == c.translator_url.empty()) {
      throw UsageError("set exactly one of translate.dictionary and translate.url");
    }
  }
  r.RejectUnknown();
  return c;
}

ExperimentConfig ExperimentConfig::Load(const fs::path& path) {
  return FromConfig(Config::Load(path), path.parent_path());
}

std::vector<std::string> ExperimentConfig::MissingResources() const {
  std::vector<std::string> missing;
  const auto check = [&](const std::string& key, const fs::path& path) {
    if (!path.empty() && !fs::exists(path)) {
      missing.push_back(key + ": " + path.string());
    }
  };
  check("data.train", train);
  check("data.dev", dev);
  check("data.test", test);
  check("data.foreign", foreign);
  check("data.silver", silver);
  check("features.embeddings", embeddings);
  for (const auto& [name, path] : lexicons) check("lexicon." + name + ".path", path);
  check("translate.dictionary", dictionary);
  check("selftrain.words", emotion_words);
  for (const VariantConfig& v : variants) {
    check("variant." + v.name + ".dev_predictions", v.dev_predictions);
    check("variant." + v.name + ".test_predictions", v.test_predictions);
  }
  return missing;
}

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               const std::optional<fs::path>& output_dir) {
  const std::vector<std::string> missing = config.MissingResources();
  if (!missing.empty()) {
    std::string message = "missing resources:";
    for (const std::string& m : missing) message += "\n  " + m;
    throw UsageError(message);
  }

  ExperimentResult result;
  std::vector<std::string>& log = result.log;
  const AffectTarget target = AffectTarget::FromTaskId(config.task_id);
  const TsvOptions tsv{config.header};
  const Dataset train = LoadDataset(config.train, target, tsv);
  const Dataset dev = LoadDataset(config.dev, target, tsv);
  std::optional<Dataset> test;
  if (!config.test.empty()) test = LoadDataset(config.test, target, tsv);
  log.push_back("task " + config.task_id + ": " + std::to_string(train.size()) +
                " train, " + std::to_string(dev.size()) + " dev, " +
                std::to_string(test ? test->size() : 0) + " test");

  FeatureSpec features;
  if (!config.embeddings.empty()) {
    features.embeddings =
        std::make_shared<const EmbeddingTable>(LoadEmbeddings(config.embeddings));
    log.push_back("embeddings: " + std::to_string(features.embeddings->size()) +
                  " x " + std::to_string(features.embeddings->dim()));
  }
  std::vector<std::shared_ptr<const Lexicon>> lexicons;
  for (const auto& [name, path] : config.lexicons) {
    lexicons.push_back(std::make_shared<const Lexicon>(LoadLexicon(path, name)));
  }
  if (config.select_lexicons && !lexicons.empty()) {
    PredictorSpec svr;
    svr.kind = ModelKind::kKernelSvr;
    svr.epsilon = ShippedDefaults().Task(config.task_id).svm_epsilon;
    const SelectionResult selection =
        ForwardSelect(lexicons, features, svr, train, config.selection_folds);
    for (const LexiconGain& g : selection.individual) {
      log.push_back("lexicon " + g.name + ": gain " + text_io::FormatFixed(g.gain, 4));
    }
    features.lexicons = selection.selected;
  } else {
    features.lexicons = lexicons;
  }
  result.selected_lexicons = features.LexiconNames();
  if (features.Width() == 0) {
    throw UsageError("the configured features have width 0");
  }

  const Matrix x_dev = features.FeaturizeDataset(dev);
  const std::vector<double> y_dev = dev.Labels();
  const Matrix x_test = test ? features.FeaturizeDataset(*test) : Matrix();
  const std::vector<double> y_test = test ? test->Labels() : std::vector<double>{};

  std::optional<Dataset> translated;
  std::vector<Tweet> silver_pool;
  for (const VariantConfig& v : config.variants) {
    if (v.spec.kind == ModelKind::kExternal) continue;
    if (v.data == DataFlavor::kTranslated && !translated) {
      const Dataset foreign = LoadDataset(config.foreign, target, tsv);
      const std::unique_ptr<Translator> translator = MakeTranslator(config);
      TranslateOptions options;
      options.source = config.source_language;
      options.target = config.target_language;
      TranslationOutcome outcome = TranslateDataset(foreign, *translator, options);
      log.push_back("translated " + std::to_string(outcome.dataset.size()) +
                    " instances, skipped " + std::to_string(outcome.skipped));
      translated = MergeTraining(train, outcome.dataset);
    }
    if (v.data == DataFlavor::kSilver && silver_pool.empty()) {
      silver_pool = LoadTweets(config.silver);
      if (!config.emotion_words.empty()) {
        const EmotionWordList words = LoadEmotionWords(config.emotion_words);
        silver_pool = BuildSilverSets(words, silver_pool)[target.dimension()];
      }
      log.push_back("silver pool: " + std::to_string(silver_pool.size()) + " tweets");
    }
  }

  if (output_dir) {
    fs::create_directories(*output_dir / "predictions");
    fs::create_directories(*output_dir / "models");
  }

  std::vector<EnsembleMember> members;
  std::vector<ManifestEntry> manifest;
  for (const VariantConfig& v : config.variants) {
    VariantOutcome outcome;
    outcome.name = v.name;
    if (v.spec.kind == ModelKind::kExternal) {
      outcome.dev = AlignPredictions(LoadPredictions(v.dev_predictions), dev.Ids());
      if (test && !v.test_predictions.empty()) {
        outcome.test =
            AlignPredictions(LoadPredictions(v.test_predictions), test->Ids());
      }
    } else {
      Dataset training = train;
      if (v.data == DataFlavor::kTranslated) training = *translated;
      if (v.data == DataFlavor::kSilver) {
        // Agreement models take the seeds right after the run seeds so that no
        // final model shares its initialization with a labeling model.
        PredictorSpec labeler = v.spec;
        labeler.seed = config.seed + v.runs;
        const std::vector<SilverCandidate> candidates =
            FilterSilver(silver_pool, labeler, features, train, config.selftrain);
        training = SelfTrain(train, candidates);
        log.push_back(v.name + ": kept " + std::to_string(candidates.size()) +
                      " of " + std::to_string(silver_pool.size()) +
                      " silver tweets (threshold " +
                      text_io::FormatDouble(config.selftrain.threshold) +
                      ", max " + std::to_string(config.selftrain.max_added) + ")");
      }
      outcome.training_size = training.size();
      outcome.added = training.size() - train.size();
      const Matrix x_train = features.FeaturizeDataset(training);
      const std::vector<double> y_train = training.Labels();
      const std::size_t n_dev = x_dev.rows();
      const std::vector<double> averaged = AverageRuns(
          v.runs, config.seed, [&](std::uint64_t seed) {
            PredictorSpec spec = v.spec;
            spec.seed = seed;
            const TrainedPredictor model = Train(spec, x_train, y_train);
            if (!model.converged()) {
              log.push_back("warning: " + v.name + " seed " + std::to_string(seed) +
                            " stopped before converging");
            }
            if (output_dir) {
              model.Save(*output_dir / "models" /
                         (v.name + ".seed" + std::to_string(seed) + ".json"));
            }
            std::vector<double> values = model.PredictAll(x_dev);
            const std::vector<double> t = model.PredictAll(x_test);
            values.insert(values.end(), t.begin(), t.end());
            return values;
          });
      outcome.dev = PredictionSet{
          dev.Ids(), std::vector<double>(averaged.begin(), averaged.begin() + n_dev)};
      if (test) {
        outcome.test = PredictionSet{
            test->Ids(), std::vector<double>(averaged.begin() + n_dev, averaged.end())};
      }
    }
    outcome.dev_score = ScoreOrZero(outcome.dev.values, y_dev, v.name + " dev", &log);
    if (test && !outcome.test.values.empty()) {
      outcome.test_score =
          ScoreOrZero(outcome.test.values, y_test, v.name + " test", &log);
    }
    log.push_back(v.name + " (" + v.spec.Describe() + ", " +
                  std::string(DataFlavorName(v.data)) + ", " +
                  std::to_string(outcome.training_size) + " training instances): dev " +
                  text_io::FormatFixed(outcome.dev_score, 4));

    members.push_back(EnsembleMember{v.name, outcome.dev, outcome.test,
                                     outcome.dev_score});
    ManifestEntry entry;
    entry.name = v.name;
    entry.dev_predictions = fs::path("predictions") / (v.name + ".dev.tsv");
    if (!outcome.test.values.empty()) {
      entry.test_predictions = fs::path("predictions") / (v.name + ".test.tsv");
    }
    entry.individual_dev_score = outcome.dev_score;
    if (output_dir) {
      SavePredictions(outcome.dev, *output_dir / entry.dev_predictions);
      if (!entry.test_predictions.empty()) {
        SavePredictions(outcome.test, *output_dir / entry.test_predictions);
      }
    }
    manifest.push_back(std::move(entry));
    result.variants.push_back(std::move(outcome));
  }

  const bool all_test = test && std::all_of(members.begin(), members.end(),
                                            [](const EnsembleMember& m) {
                                              return !m.test.values.empty();
                                            });
  const PredictionSet average_dev = AverageMembers(members, Split::kDev);
  const PredictionSet average_test =
      all_test ? AverageMembers(members, Split::kTest) : PredictionSet{};

  if (members.size() >= 2) {
    result.ensemble = StepwisePrune(members, y_dev, config.ensemble);
  } else {
    result.ensemble.kept_members = {members[0].name};
    result.ensemble.averaged_dev = average_dev;
    result.ensemble.averaged_test = average_test;
    result.ensemble.full_average_score = members[0].individual_dev_score;
    result.ensemble.dev_score = members[0].individual_dev_score;
  }
  for (const RemovalAttempt& a : result.ensemble.removal_log) {
    log.push_back(std::string("ensemble: remove ") + a.name + " -> dev " +
                  text_io::FormatFixed(a.attempted_score, 4) +
                  (a.accepted ? " (accepted)" : " (rejected)"));
  }
  std::string kept;
  for (const std::string& name : result.ensemble.kept_members) {
    kept += (kept.empty() ? "" : ",") + name;
  }
  log.push_back("ensemble keeps " + kept);

  ScoreReport& report = result.report;
  for (const VariantOutcome& v : result.variants) {
    report.Add(ScoreRow{config.task_id, v.name, v.dev_score, v.test_score});
  }
  const auto score_row = [&](const std::string& name, const PredictionSet& d,
                             const PredictionSet& t) {
    ScoreRow row{config.task_id, name, ScoreOrZero(d.values, y_dev, name + " dev", &log),
                 std::nullopt};
    if (all_test && !t.values.empty()) {
      row.test = ScoreOrZero(t.values, y_test, name + " test", &log);
    }
    report.Add(std::move(row));
  };
  score_row("average", average_dev, average_test);
  score_row("ensemble", result.ensemble.averaged_dev, result.ensemble.averaged_test);

  if (output_dir) {
    SavePredictions(average_dev, *output_dir / "predictions" / "average.dev.tsv");
    SavePredictions(result.ensemble.averaged_dev,
                    *output_dir / "predictions" / "ensemble.dev.tsv");
    if (all_test) {
      SavePredictions(average_test, *output_dir / "predictions" / "average.test.tsv");
      SavePredictions(result.ensemble.averaged_test,
                      *output_dir / "predictions" / "ensemble.test.tsv");
    }
    SaveManifest(manifest, *output_dir / "manifest.tsv");
    text_io::WriteFile(*output_dir / "report.tsv", report.ToTsv());
    std::string log_text;
    for (const std::string& line : log) log_text += line + "\n";
    text_io::WriteFile(*output_dir / "run.log", log_text);
  }
  return result;
}

}  // namespace tweetaffect
