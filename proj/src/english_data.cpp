#include "termkit/tagger.hpp"

namespace termkit::tagger {

// Bundled English language pack. Deliberately small: the tagger only has to
// separate N/Adj/PP/Other well enough for the extraction patterns, and the
// extraction tests use gold tags anyway.
const LanguagePack& LanguagePack::english() {
    static const LanguagePack pack = [] {
        LanguagePack p;
        p.language = "en";
        p.prepositions = {
            "of", "in",  "on",  "at",   "by",   "for",  "with",    "from",    "to",
            "into", "onto", "over", "under", "above", "below", "between", "among",
            "through", "during", "without", "within", "against", "about", "around",
            "across", "along", "behind", "beyond", "near", "off", "per", "via",
            "toward", "towards", "upon", "amid", "despite", "except", "versus",
            "after", "before", "until", "since", "throughout", "underneath",
            "beside", "besides",
        };
        p.function_words = {
            // determiners
            "the", "a", "an", "this", "that", "these", "those", "some", "any", "no",
            "each", "every", "either", "neither", "both", "all", "few", "many",
            "much", "several", "such", "what", "which", "whose",
            // pronouns
            "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
            "them", "my", "your", "his", "its", "our", "their", "mine", "yours",
            "hers", "ours", "theirs", "myself", "yourself", "himself", "herself",
            "itself", "ourselves", "yourselves", "themselves", "who", "whom",
            "someone", "anyone", "everyone", "nobody", "nothing", "something",
            "anything", "everything", "one",
            // conjunctions and clause glue
            "and", "or", "but", "nor", "so", "yet", "if", "because", "although",
            "though", "while", "when", "where", "why", "how", "than", "as",
            "whether", "unless", "once",
            // auxiliaries and modals
            "is", "are", "was", "were", "am", "be", "been", "being", "has", "have",
            "had", "having", "do", "does", "did", "done", "will", "would", "can",
            "could", "may", "might", "must", "shall", "should", "ought",
            // common adverbs and negation
            "not", "n't", "very", "also", "too", "just", "only", "even", "still",
            "already", "often", "never", "always", "again", "here", "there", "now",
            "then", "soon", "later", "ever", "almost", "quite", "rather", "well",
            "more", "most", "less", "least", "up", "down", "out",
        };
        p.adjectives = {
            "big",   "small", "high",  "low",    "new",   "old",    "good",  "bad",
            "large", "great", "long",  "short",  "young", "early",  "late",  "strong",
            "weak",  "main",  "key",   "major",  "minor", "net",    "gross", "deep",
            "broad", "open",  "free",  "safe",   "clean", "green",  "hot",   "cold",
            "clear", "full",  "empty", "real",   "whole", "same",   "own",   "top",
            "poor",  "rich",  "fast",  "slow",   "heavy", "light",  "hard",  "soft",
            "wide",  "narrow","cheap", "raw",    "dry",   "wet",    "flat",  "fair",
            "dark",  "bright","quick", "tight",  "loose", "middle", "due",   "blue",
            "red",   "white", "black", "gray",   "grey",  "human",  "common","solar",
        };
        p.adjective_suffixes = {"al",   "ous", "ive",  "ic",  "able", "ible",
                                "ary",  "ful", "less", "ish", "ian",  "ent",
                                "ant"};
        p.plural_rules = {
            {"sses", "ss"}, {"ies", "y"}, {"xes", "x"},
            {"ches", "ch"}, {"shes", "sh"}, {"s", ""},
        };
        p.plural_exceptions = {
            "data",     "series",   "species",  "news",       "media",
            "criteria", "phenomena","means",    "mathematics","measles",
            "headquarters",
        };
        return p;
    }();
    return pack;
}

const std::unordered_map<std::string, std::string>& irregular_verb_bases() {
    static const std::unordered_map<std::string, std::string> map = {
        {"ran", "run"},        {"was", "be"},         {"were", "be"},
        {"went", "go"},        {"gone", "go"},        {"said", "say"},
        {"made", "make"},      {"took", "take"},      {"taken", "take"},
        {"got", "get"},        {"gotten", "get"},     {"gave", "give"},
        {"given", "give"},     {"came", "come"},      {"saw", "see"},
        {"seen", "see"},       {"knew", "know"},      {"known", "know"},
        {"grew", "grow"},      {"grown", "grow"},     {"rose", "rise"},
        {"risen", "rise"},     {"fell", "fall"},      {"fallen", "fall"},
        {"held", "hold"},      {"kept", "keep"},      {"left", "leave"},
        {"met", "meet"},       {"paid", "pay"},       {"sold", "sell"},
        {"bought", "buy"},     {"brought", "bring"},  {"thought", "think"},
        {"told", "tell"},      {"found", "find"},     {"felt", "feel"},
        {"led", "lead"},       {"lost", "lose"},      {"meant", "mean"},
        {"sat", "sit"},        {"stood", "stand"},    {"spoke", "speak"},
        {"spoken", "speak"},   {"spent", "spend"},    {"wrote", "write"},
        {"written", "write"},  {"won", "win"},        {"drew", "draw"},
        {"drawn", "draw"},     {"drove", "drive"},    {"driven", "drive"},
        {"ate", "eat"},        {"eaten", "eat"},      {"began", "begin"},
        {"begun", "begin"},    {"broke", "break"},    {"broken", "break"},
        {"built", "build"},    {"caught", "catch"},   {"chose", "choose"},
        {"chosen", "choose"},  {"dealt", "deal"},     {"did", "do"},
        {"heard", "hear"},     {"laid", "lay"},       {"lent", "lend"},
        {"sent", "send"},      {"shown", "show"},     {"showed", "show"},
        {"sought", "seek"},    {"struck", "strike"},  {"taught", "teach"},
        {"threw", "throw"},    {"thrown", "throw"},   {"understood", "understand"},
        {"wore", "wear"},      {"worn", "wear"},      {"fed", "feed"},
        {"swore", "swear"},    {"sworn", "swear"},    {"froze", "freeze"},
        {"frozen", "freeze"},  {"flew", "fly"},       {"flown", "fly"},
    };
    return map;
}

} // namespace termkit::tagger
