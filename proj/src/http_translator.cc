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

#include <string>

#include "httplib.h"
#include "tweetaffect/augment.h"
#include "tweetaffect/error.h"

namespace tweetaffect {

HttpTranslator::HttpTranslator(std::string base_url, int retries,
                               std::chrono::milliseconds timeout)
    : retries_(retries), timeout_(timeout) {
  constexpr std::string_view kScheme = "http://";
  if (!base_url.starts_with(kScheme)) {
    throw UsageError("translator URL must start with http:// (got '" +
                     base_url + "')");
  }
  if (retries < 0) throw UsageError("retries must be non-negative");
  const std::size_t slash = base_url.find('/', kScheme.size());
  if (slash == std::string::npos) {
    host_ = base_url;
  } else {
    host_ = base_url.substr(0, slash);
    path_prefix_ = base_url.substr(slash);
  }
  while (!path_prefix_.empty() && path_prefix_.back() == '/') {
    path_prefix_.pop_back();
  }
  if (host_.size() == kScheme.size()) {
    throw UsageError("translator URL has no host: '" + base_url + "'");
  }
}

std::string HttpTranslator::Translate(std::string_view text,
                                      std::string_view source,
                                      std::string_view target) const {
  const std::string path =
      path_prefix_ + "/" + std::string(source) + "-" + std::string(target);
  std::string last_error;
  for (int attempt = 0; attempt <= retries_; ++attempt) {
    httplib::Client client(host_);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    const httplib::Result response =
        client.Post(path, std::string(text), "text/plain; charset=utf-8");
    if (!response) {
      last_error = httplib::to_string(response.error());
      continue;
    }
    if (response->status == 200) return response->body;
    last_error = "HTTP status " + std::to_string(response->status);
  }
  throw IoError("translation request to " + host_ + path + " failed after " +
                std::to_string(retries_ + 1) + " attempts: " + last_error);
}

}  // namespace tweetaffect
