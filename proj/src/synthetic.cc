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

#include "tweetaffect/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tweetaffect/error.h"
#include "tweetaffect/random.h"
#include "tweetaffect/text_io.h"

namespace tweetaffect {
namespace {

constexpr std::string_view kTargetConsonants = "bcdfglmnprstv";
constexpr std::string_view kTargetVowels = "aeiou";
constexpr std::string_view kForeignConsonants = "hkwz";
constexpr std::string_view kForeignVowels = "aeiouy";
constexpr double kAffectShare = 0.35;
constexpr double kEmbeddingSignal = 2.0;
constexpr double kLabelSlope = 3.0;

const char* const kEmoji[] = {"\U0001F600", "\U0001F621", "\U0001F622",
                              "\U0001F631", "❤️", "\U0001F44D"};

std::string MakeWord(std::size_t index, std::string_view consonants,
                     std::string_view vowels, std::size_t min_syllables) {
  const std::size_t base = consonants.size() * vowels.size();
  std::string word;
  std::size_t n = index;
  for (std::size_t s = 0; s < min_syllables || n > 0; ++s) {
    const std::size_t syllable = n % base;
    n /= base;
    word += consonants[syllable / vowels.size()];
    word += vowels[syllable % vowels.size()];
  }
  return word;
}

std::string Capitalize(std::string word) {
  if (!word.empty() && word[0] >= 'a' && word[0] <= 'z') word[0] -= 'a' - 'A';
  return word;
}

double Sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

class Generator {
 public:
  Generator(const SyntheticOptions& options)
      : options_(options), rng_(options.seed) {
    const std::size_t vocab = options.affect_words + options.neutral_words;
    // Shuffle indices so that affect words are not recognizable by form.
    std::vector<std::size_t> ids(vocab);
    std::iota(ids.begin(), ids.end(), 0);
    rng_.Shuffle(std::span<std::size_t>(ids));
    for (std::size_t i = 0; i < vocab; ++i) {
      words_.push_back(MakeWord(ids[i] + 70, kTargetConsonants, kTargetVowels, 2));
      foreign_.push_back(MakeWord(ids[i] + 30, kForeignConsonants, kForeignVowels, 3));
      affect_.push_back(i < options.affect_words ? rng_.Uniform(-1.0, 1.0) : 0.0);
    }
    // Indicator words: the affect words with the highest scores.
    std::vector<std::size_t> order(options.affect_words);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return affect_[a] > affect_[b];
    });
    order.resize(std::min(options.indicator_words, order.size()));
    indicators_ = order;
  }

  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::string>& foreign() const { return foreign_; }
  const std::vector<double>& affect() const { return affect_; }
  const std::vector<std::size_t>& indicators() const { return indicators_; }
  Rng& rng() { return rng_; }

  // Word indices of one tweet.
  std::vector<std::size_t> Content(bool force_indicator, bool background) {
    const std::size_t length = 6 + rng_.Below(9);
    std::vector<std::size_t> content;
    for (std::size_t t = 0; t < length; ++t) {
      const double share = background ? 0.05 : kAffectShare;
      if (rng_.Bernoulli(share)) {
        std::size_t w = rng_.Below(options_.affect_words);
        while (background && IsIndicator(w)) w = rng_.Below(options_.affect_words);
        content.push_back(w);
      } else {
        content.push_back(options_.affect_words + rng_.Below(options_.neutral_words));
      }
    }
    if (force_indicator && !indicators_.empty()) {
      const std::size_t slot = rng_.Below(content.size());
      content[slot] = indicators_[rng_.Below(indicators_.size())];
    }
    return content;
  }

  double Label(const std::vector<std::size_t>& content) {
    double sum = 0.0;
    for (std::size_t w : content) sum += affect_[w];
    const double z = sum / std::sqrt(static_cast<double>(content.size()));
    const double noisy = Sigmoid(kLabelSlope * z) + rng_.Normal(0.0, options_.label_noise);
    return std::clamp(noisy, 0.0, 1.0);
  }

  // Surface text with casing, punctuation, mentions, links, hashtags and emoji.
  std::string Render(const std::vector<std::size_t>& content, bool foreign) {
    const std::vector<std::string>& lexicon = foreign ? foreign_ : words_;
    std::vector<std::string> parts;
    if (rng_.Bernoulli(0.15)) parts.push_back("@user" + std::to_string(rng_.Below(1000)));
    for (std::size_t w : content) parts.push_back(lexicon[w]);
    if (rng_.Bernoulli(0.3)) parts[parts.size() - content.size()] =
        Capitalize(parts[parts.size() - content.size()]);
    if (rng_.Bernoulli(0.3)) parts.back() += "!";
    if (rng_.Bernoulli(0.1)) {
      parts.push_back("#" + lexicon[options_.affect_words +
                                    rng_.Below(options_.neutral_words)]);
    }
    if (rng_.Bernoulli(0.15)) {
      parts.push_back("https://t.co/" + MakeWord(rng_.Below(5000), "xyz", "0123", 3));
    }
    if (rng_.Bernoulli(0.2)) parts.push_back(kEmoji[rng_.Below(std::size(kEmoji))]);
    std::string text;
    for (const std::string& part : parts) text += (text.empty() ? "" : " ") + part;
    return text;
  }

 private:
  bool IsIndicator(std::size_t w) const {
    return std::find(indicators_.begin(), indicators_.end(), w) != indicators_.end();
  }

  const SyntheticOptions& options_;
  Rng rng_;
  std::vector<std::string> words_;
  std::vector<std::string> foreign_;
  std::vector<double> affect_;
  std::vector<std::size_t> indicators_;
};

void FillDataset(Generator& g, Dataset* dataset, std::size_t count,
                 const std::string& prefix, bool foreign) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::vector<std::size_t> content = g.Content(false, false);
    const double label = g.Label(content);
    const std::string id = prefix + std::to_string(i + 1);
    dataset->Add(LabeledInstance{Preprocess(g.Render(content, foreign), id), label,
                                 Origin::kGold});
  }
}

std::string SmokeConfig(const SyntheticTask& task, std::uint64_t seed,
                        const SmokeSettings& smoke) {
  const std::string emotion(DimensionName(task.train.target().dimension()));
  std::string c;
  c += "# Synthetic smoke experiment: regular, translated and self-trained\n";
  c += "# feed-forward variants plus a kernel regressor, then ensembling.\n";
  c += "experiment.task = " + task.train.target().TaskId() + "\n";
  c += "experiment.seed = " + std::to_string(seed) + "\n";
  c += "experiment.runs = " + std::to_string(smoke.runs) + "\n";
  c += "experiment.variants = ff-r, ff-t, ff-s, svr-r\n\n";
  c += "data.train = train.tsv\n";
  c += "data.dev = dev.tsv\n";
  c += "data.test = test.tsv\n";
  c += "data.foreign = foreign.tsv\n";
  c += "data.silver = silver.tsv\n\n";
  c += "features.embeddings = embeddings.txt\n";
  c += "features.lexicons = synthlex, noise\n";
  c += "features.select_lexicons = " +
       std::string(smoke.select_lexicons ? "true" : "false") + "\n";
  c += "features.selection_folds = 3\n";
  c += "lexicon.synthlex.path = synthlex.tsv\n";
  c += "lexicon.noise.path = noise.tsv\n\n";
  c += "translate.dictionary = dictionary.tsv\n";
  c += "translate.source = xx\n";
  c += "translate.target = es\n\n";
  c += "selftrain.k = " + std::to_string(smoke.agreement_models) + "\n";
  c += "selftrain.threshold = " + text_io::FormatDouble(smoke.threshold) + "\n";
  c += "selftrain.max_added = " + std::to_string(smoke.max_added) + "\n";
  c += "selftrain.words = emotion_words.tsv\n\n";
  c += "ensemble.min_gain = 0.002\n\n";
  for (const char* name : {"ff-r", "ff-t", "ff-s"}) {
    const std::string p = std::string("variant.") + name + ".";
    const char flavor = name[3];
    c += p + "model = feed_forward\n";
    c += p + "data = " +
         (flavor == 'r' ? "regular" : flavor == 't' ? "translated" : "silver") + "\n";
    c += p + "layers = " + smoke.ff_layers + "\n";
    c += p + "epochs = " + std::to_string(smoke.ff_epochs) + "\n\n";
  }
  c += "variant.svr-r.model = kernel_svr\n";
  c += "variant.svr-r.data = regular\n";
  c += "variant.svr-r.epsilon = 0.05\n";
  c += "variant.svr-r.runs = 1\n";
  (void)emotion;
  return c;
}

}  // namespace

SyntheticTask GenerateSyntheticTask(const SyntheticOptions& options) {
  if (options.emotion == Dimension::kValence) {
    throw UsageError("synthetic tasks are emotion-intensity tasks");
  }
  if (options.affect_words == 0 || options.neutral_words == 0 ||
      options.embedding_dim == 0) {
    throw UsageError("synthetic vocabulary and embedding sizes must be positive");
  }
  const AffectTarget target(options.emotion, TaskKind::kRegression);
  SyntheticTask task(target);
  Generator g(options);
  Rng& rng = g.rng();
  const std::string dimension(DimensionName(options.emotion));

  const std::size_t vocab = g.words().size();
  for (std::size_t i = 0; i < vocab; ++i) {
    task.affect[g.words()[i]] = g.affect()[i];
    task.dictionary[g.foreign()[i]] = g.words()[i];
  }

  std::vector<double> direction(options.embedding_dim);
  double norm = 0.0;
  for (double& d : direction) {
    d = rng.Normal();
    norm += d * d;
  }
  for (double& d : direction) d /= std::sqrt(norm);
  task.embeddings = EmbeddingTable(options.embedding_dim);
  for (std::size_t i = 0; i < vocab; ++i) {
    std::vector<double> v(options.embedding_dim);
    for (std::size_t k = 0; k < v.size(); ++k) {
      v[k] = kEmbeddingSignal * g.affect()[i] * direction[k] + rng.Normal();
    }
    task.embeddings.Add(g.words()[i], std::move(v));
  }

  for (std::size_t i = 0; i < options.affect_words; ++i) {
    if (rng.Bernoulli(options.lexicon_coverage)) {
      task.lexicon.Set(g.words()[i], dimension, g.affect()[i]);
    }
  }
  if (task.lexicon.empty()) task.lexicon.Set(g.words()[0], dimension, g.affect()[0]);
  for (std::size_t i = 0; i < 40; ++i) {
    task.noise_lexicon.Set(g.words()[rng.Below(vocab)], dimension,
                           rng.Uniform(-1.0, 1.0));
  }
  for (std::size_t w : g.indicators()) task.indicator_words.push_back(g.words()[w]);

  FillDataset(g, &task.train, options.train_size, "train-", false);
  FillDataset(g, &task.dev, options.dev_size, "dev-", false);
  FillDataset(g, &task.test, options.test_size, "test-", false);
  FillDataset(g, &task.foreign, options.foreign_size, "foreign-", true);
  for (std::size_t i = 0; i < options.silver_size; ++i) {
    task.silver.push_back(Preprocess(g.Render(g.Content(true, false), false),
                                     "silver-" + std::to_string(i + 1)));
  }
  for (std::size_t i = 0; i < options.background_size; ++i) {
    task.background.push_back(Preprocess(g.Render(g.Content(false, true), false),
                                         "background-" + std::to_string(i + 1)));
  }
  return task;
}

void WriteSyntheticTask(const SyntheticTask& task,
                        const std::filesystem::path& dir,
                        std::uint64_t experiment_seed,
                        const SmokeSettings& smoke) {
  SaveDataset(task.train, dir / "train.tsv");
  SaveDataset(task.dev, dir / "dev.tsv");
  SaveDataset(task.test, dir / "test.tsv");
  SaveDataset(task.foreign, dir / "foreign.tsv");
  std::string dictionary;
  for (const auto& [source, target] : task.dictionary) {
    dictionary += source + "\t" + target + "\n";
  }
  text_io::WriteFile(dir / "dictionary.tsv", dictionary);
  std::string silver;
  for (const Tweet& t : task.silver) silver += t.id + "\t" + t.raw + "\n";
  text_io::WriteFile(dir / "silver.tsv", silver);
  std::string background;
  for (const Tweet& t : task.background) background += t.raw + "\n";
  text_io::WriteFile(dir / "background.txt", background);
  const std::string emotion(DimensionName(task.train.target().dimension()));
  std::string words;
  for (const std::string& w : task.indicator_words) words += w + "\t" + emotion + "\n";
  text_io::WriteFile(dir / "emotion_words.tsv", words);
  SaveEmbeddings(task.embeddings, dir / "embeddings.txt");
  SaveLexicon(task.lexicon, dir / "synthlex.tsv");
  SaveLexicon(task.noise_lexicon, dir / "noise.tsv");
  text_io::WriteFile(dir / "experiment.conf",
                     SmokeConfig(task, experiment_seed, smoke));
}

}  // namespace tweetaffect
