// Copyright 2026 The DNA2DBC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DNA2DBC_REFERENCE_SAMPLES_HPP
#define DNA2DBC_REFERENCE_SAMPLES_HPP

#include <string_view>

namespace dna2dbc {

// Human prepro cortistatin mRNA excerpt (GenBank accession AB000263). The
// header's len field declares 368 bases but the excerpt itself carries 359;
// it is kept verbatim. Mirrored in data/ab000263.fasta.
inline constexpr std::string_view kCortistatinSample =
    ">AB000263 |acc=AB000263|descr=Homo sapiens mRNA for prepro cortistatin "
    "like peptide, complete cds.|len=368\n"
    "ACAAGATGCCATTGTCCCCGGCCTCC\n"
    "TGCTGCTGCTGCTCTCCGGGGCCACGG\n"
    "CCACCGCTGCCCTGCCCTGGAGGGTG\n"
    "GCCCCACCGGCCGAGACAGCGAGCATA\n"
    "TGCAGGAAGCGGCAGGAATAAGGAAAA\n"
    "GCAGCCTCCTGACTTTCCTCGCTTGGT\n"
    "GGTTTGAGTGGACCTCCCAGGCCAGTG\n"
    "CCGGGCCCTCATAGGAGAGGAAGCTC\n"
    "GGGAGGTGGCCAGGCGGCAGGAAGGC\n"
    "GCACCCCCCAGCAATCCGCGCGCCGG\n"
    "GACAGAATGCCCTGCAGGAATTCTTC\n"
    "TGGAAGACTTTCTCCTGCAAATAAA\n"
    "ACCTACCCATGAATGCTCACGCAAGTT\n"
    "TAATTACAGACCTGAA\n";

// First part of the human insulin coding sequence. Mirrored in
// data/insulin.fasta.
inline constexpr std::string_view kInsulinSample =
    "> insulin |homo sapiens\n"
    "TACAAACATTTAGTTGTAAACACACCCTC\n"
    "AGTGGACCAACTCCGCAACATAAACCAA\n"
    "ACACCGCTCGCGCCGAAAAAGATATGG\n"
    "GGGTTTTGG\n";

}  // namespace dna2dbc

#endif  // DNA2DBC_REFERENCE_SAMPLES_HPP
