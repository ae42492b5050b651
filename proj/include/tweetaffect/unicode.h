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

#ifndef TWEETAFFECT_UNICODE_H_
#define TWEETAFFECT_UNICODE_H_

#include <string>
#include <string_view>

// Minimal UTF-8 and code point classification helpers for tweet text.
namespace tweetaffect::unicode {

// Invalid byte sequences decode to U+FFFD, one per offending byte.
std::u32string Decode(std::string_view utf8);
std::string Encode(std::u32string_view code_points);
void AppendUtf8(char32_t code_point, std::string* out);

bool IsSpace(char32_t c);
// Pictographic emoji and symbols with the Unicode Emoji property, excluding
// ASCII digits and '#', '*' that carry the property only for keycaps.
bool IsEmoji(char32_t c);
// Invisible joiners and presentation selectors that glue emoji sequences.
bool IsEmojiGlue(char32_t c);
bool IsPunctuation(char32_t c);
// Letters, digits, underscore, and any non-ASCII code point that is neither
// whitespace, punctuation, nor emoji.
bool IsWordChar(char32_t c);

// Lowercases ASCII, Latin-1, Latin Extended-A, basic Greek and Cyrillic.
char32_t ToLower(char32_t c);
std::u32string ToLower(std::u32string_view text);
std::string ToLowerUtf8(std::string_view text);

}  // namespace tweetaffect::unicode

#endif  // TWEETAFFECT_UNICODE_H_
