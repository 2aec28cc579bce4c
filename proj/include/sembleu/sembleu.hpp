// Convenience include for the whole library.
#pragma once

#include "sembleu/graph.hpp"
#include "sembleu/harness.hpp"
#include "sembleu/metric.hpp"
#include "sembleu/ngram.hpp"
#include "sembleu/penman.hpp"
#include "sembleu/random.hpp"
#include "sembleu/smatch.hpp"
#include "sembleu/synthetic.hpp"
#include "sembleu/triples.hpp"
