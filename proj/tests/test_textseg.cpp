#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace rhetor;

namespace {

std::vector<std::string> surfaces(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  for (const auto &t : tokens) out.push_back(t.surface);
  return out;
}

std::size_t word_count(const std::vector<Token> &tokens) {
  std::size_t n = 0;
  for (const auto &t : tokens) n += t.is_word;
  return n;
}

}  // namespace

TEST(Tokenize, TrailingPunctuationSplitsOff) {
  const auto t = tokenize("end.");
  EXPECT_EQ(surfaces(t), (std::vector<std::string>{"end", "."}));
  EXPECT_TRUE(t[0].is_word);
  EXPECT_FALSE(t[1].is_word);
}

TEST(Tokenize, StandaloneHyphenIsPunctuation) {
  const auto t = tokenize("a - b");
  EXPECT_EQ(surfaces(t), (std::vector<std::string>{"a", "-", "b"}));
  EXPECT_FALSE(t[1].is_word);
}

TEST(Tokenize, InternalApostropheAndHyphenStay) {
  EXPECT_EQ(surfaces(tokenize("don't stop")), (std::vector<std::string>{"don't", "stop"}));
  EXPECT_EQ(surfaces(tokenize("battle-field")), (std::vector<std::string>{"battle-field"}));
}

TEST(Tokenize, LeadingAndTrailingRunsBecomeSingleTokens) {
  EXPECT_EQ(surfaces(tokenize("\"(Oh!)\"")), (std::vector<std::string>{"\"", "(", "Oh", "!", ")", "\""}));
}

TEST(Tokenize, EmDashAndCurlyQuotesArePunctuation) {
  EXPECT_EQ(surfaces(tokenize("\xE2\x80\x9Cyes\xE2\x80\x9D\xE2\x80\x94no")),
            (std::vector<std::string>{"\xE2\x80\x9C", "yes\xE2\x80\x9D\xE2\x80\x94no"}));
  EXPECT_EQ(surfaces(tokenize("word\xE2\x80\x94")), (std::vector<std::string>{"word", "\xE2\x80\x94"}));
}

TEST(Tokenize, PunctuationOnlyChunk) {
  const auto t = tokenize("--");
  EXPECT_EQ(surfaces(t), (std::vector<std::string>{"-", "-"}));
  EXPECT_EQ(word_count(t), 0u);
}

TEST(Tokenize, OffsetsPointIntoSource) {
  const std::string text = "  Hello,  world; \xE2\x80\x94 fine.  ";
  for (const auto &tok : tokenize(text)) {
    ASSERT_FALSE(tok.surface.empty());
    EXPECT_EQ(text.substr(tok.char_offset, tok.surface.size()), tok.surface);
  }
}

TEST(Tokenize, BaseOffsetIsAdded) {
  const auto t = tokenize("ab cd", 10);
  EXPECT_EQ(t[0].char_offset, 10u);
  EXPECT_EQ(t[1].char_offset, 13u);
}

TEST(Tokenize, EmptyAndBlankInput) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize(" \t\n ").empty());
}

TEST(Tokenize, WordCountIgnoresSurroundingWhitespace) {
  std::mt19937_64 gen(7);
  const std::vector<std::string> pieces = {"a", "b.", "c,", "--", "d'e", ";", "f-g", "!"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int i = 0; i < 8; ++i) text += pieces[gen() % pieces.size()] + " ";
    const auto base = word_count(tokenize(text));
    EXPECT_EQ(word_count(tokenize("   \n" + text + "\t\t  ")), base);
  }
}

TEST(SplitSentences, Empty) { EXPECT_TRUE(split_sentences("").empty()); }

TEST(SplitSentences, TwoSentences) {
  const auto s = split_sentences("A b. C d!");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "A b.");
  EXPECT_EQ(s[1].text, "C d!");
  EXPECT_EQ(s[0].index, 0u);
  EXPECT_EQ(s[1].index, 1u);
}

TEST(SplitSentences, ThreeShortSentences) {
  const auto s = split_sentences("I came. I saw. I conquered.");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[2].text, "I conquered.");
}

TEST(SplitSentences, TerminalInsideWordDoesNotSplit) {
  const auto s = split_sentences("Version 2.5 is out. e.g.x stays");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "Version 2.5 is out.");
  EXPECT_EQ(s[1].text, "e.g.x stays");
}

TEST(SplitSentences, ClosingQuoteAfterTerminal) {
  const auto s = split_sentences("He said \"stop.\" Then he left.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "He said \"stop.\"");
}

TEST(SplitSentences, UnterminatedTailIsASentence) {
  const auto s = split_sentences("One. two three");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].text, "two three");
}

TEST(SplitSentences, AbbreviationsSplit) {
  // Known limitation: no abbreviation list.
  EXPECT_EQ(split_sentences("Mr. Bennet replied.").size(), 2u);
}

TEST(SplitSentences, PartitionsAllWords) {
  const std::string text =
      "Four score and seven years ago. Now we are engaged -- testing whether! That nation? Yes; it can";
  std::size_t in_sentences = 0;
  for (const auto &s : split_sentences(text)) {
    ASSERT_FALSE(s.tokens.empty());
    in_sentences += word_count(s.tokens);
    for (const auto &t : s.tokens) EXPECT_EQ(text.substr(t.char_offset, t.surface.size()), t.surface);
  }
  EXPECT_EQ(in_sentences, word_count(tokenize(text)));
}

TEST(SplitSentences, IdempotentOnSingleSentence) {
  for (const std::string text : {"We shall fight on the beaches.", "Stop; look - listen!", "no end here"}) {
    const auto once = split_sentences(text);
    ASSERT_EQ(once.size(), 1u);
    const auto twice = split_sentences(once[0].text);
    ASSERT_EQ(twice.size(), 1u);
    EXPECT_EQ(twice[0].text, once[0].text);
    EXPECT_EQ(surfaces(twice[0].tokens), surfaces(once[0].tokens));
  }
}

TEST(Tagging, BundledLexiconBasics) {
  const auto &lex = testdata::bundled_tags();
  EXPECT_GT(lex.size(), 10000u);
  EXPECT_EQ(lex.lookup("the"), PosTag::DET);
  EXPECT_EQ(lex.lookup("THE"), PosTag::DET);
  EXPECT_EQ(lex.lookup("of"), PosTag::ADP);
  EXPECT_EQ(lex.lookup("people"), PosTag::NOUN);
  EXPECT_FALSE(lex.lookup("zxqwv").has_value());
}

TEST(Tagging, PunctuationAndUnknownWords) {
  const auto &lex = testdata::bundled_tags();
  const auto tagged = tag(tokenize("The zxqwv ;"), lex);
  ASSERT_EQ(tagged.size(), 3u);
  EXPECT_EQ(tagged[0].tag, PosTag::DET);
  EXPECT_EQ(tagged[1].tag, PosTag::NOUN);
  EXPECT_EQ(tagged[2].tag, PosTag::PUNCT);
}

TEST(Tagging, OutputLengthAndDeterminism) {
  const auto &lex = testdata::bundled_tags();
  const auto tokens = tokenize("of the people, by the people, for the people!");
  const auto a = tag(tokens, lex);
  const auto b = tag(tokens, lex);
  ASSERT_EQ(a.size(), tokens.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].tag, b[i].tag);
    EXPECT_EQ(a[i].token, tokens[i]);
    if (!tokens[i].is_word) {
      EXPECT_EQ(a[i].tag, PosTag::PUNCT);
    }
  }
}

TEST(TagLexiconFile, FirstEntryWins) {
  std::istringstream in("run\tVERB\nRun\tNOUN\n\nfast\tADV\r\n");
  const auto lex = TagLexicon::from_stream(in);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.lookup("run"), PosTag::VERB);
  EXPECT_EQ(lex.lookup("fast"), PosTag::ADV);
}

TEST(TagLexiconFile, MalformedLinesNameTheLine) {
  std::istringstream no_tab("ok\tNOUN\nbroken line\n");
  try {
    TagLexicon::from_stream(no_tab);
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  std::istringstream bad_tag("word\tNOUNISH\n");
  EXPECT_THROW(TagLexicon::from_stream(bad_tag), Error);
}

TEST(TagLexiconFile, MissingFile) { EXPECT_THROW(TagLexicon::load("/nonexistent/tags.tsv"), Error); }

TEST(TagNames, RoundTrip) {
  for (std::size_t i = 0; i < kPosTagNames.size(); ++i) {
    const auto t = static_cast<PosTag>(i);
    EXPECT_EQ(parse_tag(tag_name(t)), t);
  }
  EXPECT_FALSE(parse_tag("noun").has_value());
}
