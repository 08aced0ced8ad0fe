#include "scholrank/ingest.hpp"

// Semantic-type tables for UMLS concept filtering; data/type_ids_*.tsv hold the same rows.

namespace scholrank {

namespace {

const std::vector<SemanticType> kRetained{
    {"T116", "aapp", "Amino Acid, Peptide, or Protein"},
    {"T020", "acab", "Acquired Abnormality"},
    {"T100", "aggp", "Age Group"},
    {"T087", "amas", "Amino Acid Sequence"},
    {"T011", "amph", "Amphibian"},
    {"T190", "anab", "Anatomical Abnormality"},
    {"T008", "anim", "Animal"},
    {"T017", "anst", "Anatomical Structure"},
    {"T195", "antb", "Antibiotic"},
    {"T194", "arch", "Archaeon"},
    {"T123", "bacs", "Biologically Active Substance"},
    {"T007", "bact", "Bacterium"},
    {"T031", "bdsu", "Body Substance"},
    {"T022", "bdsy", "Body System"},
    {"T038", "biof", "Biologic Function"},
    {"T012", "bird", "Bird"},
    {"T029", "blor", "Body Location or Region"},
    {"T091", "bmod", "Biomedical Occupation or Discipline"},
    {"T122", "bodm", "Biomedical or Dental Material"},
    {"T023", "bpoc", "Body Part, Organ, or Organ Component"},
    {"T030", "bsoj", "Body Space or Junction"},
    {"T026", "celc", "Cell Component"},
    {"T043", "celf", "Cell Function"},
    {"T025", "cell", "Cell"},
    {"T019", "cgab", "Congenital Abnormality"},
    {"T103", "chem", "Chemical"},
    {"T120", "chvf", "Chemical Viewed Functionally"},
    {"T104", "chvs", "Chemical Viewed Structurally"},
    {"T201", "clna", "Clinical Attribute"},
    {"T200", "clnd", "Clinical Drug"},
    {"T049", "comd", "Cell or Molecular Dysfunction"},
    {"T088", "crbs", "Carbohydrate Sequence"},
    {"T203", "drdd", "Drug Delivery Device"},
    {"T047", "dsyn", "Disease or Syndrome"},
    {"T069", "eehu", "Environmental Effect of Humans"},
    {"T196", "elii", "Element, Ion, or Isotope"},
    {"T018", "emst", "Embryonic Structure"},
    {"T126", "enzy", "Enzyme"},
    {"T204", "euka", "Eukaryote"},
    {"T021", "ffas", "Fully Formed Anatomical Structure"},
    {"T013", "fish", "Fish"},
    {"T033", "fndg", "Finding"},
    {"T004", "fngs", "Fungus"},
    {"T168", "food", "Food"},
    {"T045", "genf", "Genetic Function"},
    {"T083", "geoa", "Geographic Area"},
    {"T028", "gngm", "Gene or Genome"},
    {"T102", "grpa", "Group Attribute"},
    {"T096", "grup", "Group"},
    {"T068", "hcpp", "Human-caused Phenomenon or Process"},
    {"T093", "hcro", "Health Care Related Organization"},
    {"T131", "hops", "Hazardous or Poisonous Substance"},
    {"T125", "horm", "Hormone"},
    {"T016", "humn", "Human"},
    {"T129", "imft", "Immunologic Factor"},
    {"T055", "inbe", "Individual Behavior"},
    {"T197", "inch", "Inorganic Chemical"},
    {"T037", "inpo", "Injury or Poisoning"},
    {"T130", "irda", "Indicator, Reagent, or Diagnostic Aid"},
    {"T171", "lang", "Language"},
    {"T059", "lbpr", "Laboratory Procedure"},
    {"T034", "lbtr", "Laboratory or Test Result"},
    {"T015", "mamm", "Mammal"},
    {"T074", "medd", "Medical Device"},
    {"T073", "mnob", "Manufactured Object"},
    {"T048", "mobd", "Mental or Behavioral Dysfunction"},
    {"T044", "moft", "Molecular Function"},
    {"T085", "mosq", "Molecular Sequence"},
    {"T191", "neop", "Neoplastic Process"},
    {"T114", "nnon", "Nucleic Acid, Nucleoside, or Nucleotide"},
    {"T086", "nusq", "Nucleotide Sequence"},
    {"T109", "orch", "Organic Chemical"},
    {"T032", "orga", "Organism Attribute"},
    {"T040", "orgf", "Organism Function"},
    {"T001", "orgm", "Organism"},
    {"T092", "orgt", "Organization"},
    {"T042", "ortf", "Organ or Tissue Function"},
    {"T046", "patf", "Pathologic Function"},
    {"T072", "phob", "Physical Object"},
    {"T039", "phsf", "Physiologic Function"},
    {"T121", "phsu", "Pharmacologic Substance"},
    {"T002", "plnt", "Plant"},
    {"T101", "podg", "Patient or Disabled Group"},
    {"T192", "rcpt", "Receptor"},
    {"T014", "rept", "Reptile"},
    {"T075", "resd", "Research Device"},
    {"T005", "virs", "Virus"},
    {"T127", "vita", "Vitamin"},
    {"T010", "vtbt", "Vertebrate"},
};

const std::vector<SemanticType> kDiscarded{
    {"T052", "acty", "Activity"},
    {"T185", "clas", "Classification"},
    {"T077", "cnce", "Conceptual Entity"},
    {"T060", "diap", "Diagnostic Procedure"},
    {"T056", "dora", "Daily or Recreational Activity"},
    {"T065", "edac", "Educational Activity"},
    {"T050", "emod", "Experimental Model of Disease"},
    {"T071", "enty", "Entity"},
    {"T051", "evnt", "Event"},
    {"T099", "famg", "Family Group"},
    {"T169", "ftcn", "Functional Concept"},
    {"T064", "gora", "Governmental or Regulatory Activity"},
    {"T058", "hlca", "Health Care Activity"},
    {"T078", "idcn", "Idea or Concept"},
    {"T170", "inpr", "Intellectual Product"},
    {"T063", "mbrt", "Molecular Biology Research Technique"},
    {"T066", "mcha", "Machine Activity"},
    {"T041", "menp", "Mental Process"},
    {"T070", "npop", "Natural Phenomenon or Process"},
    {"T057", "ocac", "Occupational Activity"},
    {"T090", "ocdi", "Occupation or Discipline"},
    {"T067", "phpr", "Phenomenon or Process"},
    {"T098", "popg", "Population Group"},
    {"T097", "prog", "Professional or Occupational Group"},
    {"T094", "pros", "Professional Society"},
    {"T080", "qlco", "Qualitative Concept"},
    {"T081", "qnco", "Quantitative Concept"},
    {"T062", "resa", "Research Activity"},
    {"T089", "rnlw", "Regulation or Law"},
    {"T167", "sbst", "Substance"},
    {"T095", "shro", "Self-help or Relief Organization"},
    {"T054", "socb", "Social Behavior"},
    {"T082", "spco", "Spatial Concept"},
};

}  // namespace

std::span<const SemanticType> default_retained_types() { return kRetained; }
std::span<const SemanticType> default_discarded_types() { return kDiscarded; }

}  // namespace scholrank
