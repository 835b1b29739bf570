#ifndef TWEETSENSE_TWEETSENSE_HPP_
#define TWEETSENSE_TWEETSENSE_HPP_

// Umbrella header for the whole library.

#include "tweetsense/bayes_classifier.hpp"
#include "tweetsense/cooccurrence_index.hpp"
#include "tweetsense/corpus.hpp"
#include "tweetsense/errors.hpp"
#include "tweetsense/eval.hpp"
#include "tweetsense/phrase_extractor.hpp"
#include "tweetsense/pos_tagger.hpp"
#include "tweetsense/so_classifier.hpp"
#include "tweetsense/text.hpp"

#endif  // TWEETSENSE_TWEETSENSE_HPP_
