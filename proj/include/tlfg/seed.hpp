// tlfg -- built-in desk-scale tables: root lexicon, suffix inventory,
// verb frames and the c-structure backbone. The CLI uses these unless
// the corresponding --lexicon/--suffixes/--subcat/--grammar flag points
// at a replacement file in the same format.
#pragma once

namespace tlfg::seed {

inline constexpr const char* kLexicon = R"(# surface	category	flags
# nouns
çocuk	N	soft
kitap	N	soft
yemek	N	soft
ekmek	N	soft
ağaç	N	soft
çiçek	N	soft
köpek	N	soft
sokak	N	soft
ev	N
top	N
adam	N
kadın	N
anne	N
baba	N
okul	N
araba	N
masa	N
kapı	N
göz	N
gün	N
yol	N
deniz	N
kalem	N
bahçe	N
park	N
oda	N
duvar	N
kuş	N
kedi	N
elma	N
çay	N
taş	N
dağ	N
el	N
baş	N
söz	N
ses	N
sınıf	N
öğretmen	N
arkadaş	N
hafta	N
sabah	N
akşam	N
gece	N
# verbs
ver	V
gel	V
git	V
pişir	V
hızlan	V
bul	V
oku	V
gör	V
al	V
yap	V
koş	V
otur	V
bekle	V
# adjectives (qual = qualitative, usable as adverbial complement)
küçük	ADJ	qual
büyük	ADJ	qual
iyi	ADJ	qual
kötü	ADJ	qual
güzel	ADJ	qual
eski	ADJ
yeni	ADJ
kırmızı	ADJ
mavi	ADJ
sarı	ADJ
uzun	ADJ
kısa	ADJ
# pronouns; genitive forms are lexicalized
ben	PRON	agr=1SG
sen	PRON	agr=2SG
o	PRON	agr=3SG
biz	PRON	agr=1PL
siz	PRON	agr=2PL
onlar	PRON	agr=3PL
benim	PRON	agr=1SG,case=GEN
senin	PRON	agr=2SG,case=GEN
onun	PRON	agr=3SG,case=GEN
bizim	PRON	agr=1PL,case=GEN
sizin	PRON	agr=2PL,case=GEN
onların	PRON	agr=3PL,case=GEN
# adverbs
dün	ADVP	sub=TEMP
bugün	ADVP	sub=TEMP
yarın	ADVP	sub=TEMP
şimdi	ADVP	sub=TEMP
)";

inline constexpr const char* kSuffixes = R"(# id	template	fromClasses	toClass	features
PLU	lAr	NStem,AdjKi	NPlu	agr=3PL
POSS.1SG	(I)m	NStem,NPlu,AdjKi	NPoss	poss=1SG
POSS.2SG	(I)n	NStem,NPlu,AdjKi	NPoss	poss=2SG
POSS.3SG	(s)I	NStem,NPlu,AdjKi	NPoss	poss=3SG
POSS.1PL	(I)mIz	NStem,NPlu,AdjKi	NPoss	poss=1PL
POSS.2PL	(I)nIz	NStem,NPlu,AdjKi	NPoss	poss=2PL
POSS.3PL	lArI	NStem,AdjKi	NPoss	poss=3PL
POSS.3PL.PL	I	NPlu	NPoss	poss=3PL
ACC	(y)I	NStem,NPlu,AdjKi	NCase	case=ACC
ACC.POSS	(n)I	NPoss	NCase	case=ACC
DAT	(y)A	NStem,NPlu,AdjKi	NCase	case=DAT
DAT.POSS	(n)A	NPoss	NCase	case=DAT
LOC	DA	NStem,NPlu,AdjKi	NCaseKi	case=LOC
LOC.POSS	(n)DA	NPoss	NCaseKi	case=LOC
ABL	DAn	NStem,NPlu,AdjKi	NCase	case=ABL
ABL.POSS	(n)DAn	NPoss	NCase	case=ABL
GEN	(n)In	NStem,NPlu,NPoss,AdjKi	NCaseKi	case=GEN
INS	(y)lA	NStem,NPlu,NPoss,AdjKi	NCase	case=INS
KI	ki	NCaseKi	AdjKi	conv=ADJ:ki
PAST	DI	VStem	VPast	aspect=PAST
PERS.1SG	m	VPast	VFin	agr=1SG
PERS.2SG	n	VPast	VFin	agr=2SG
PERS.3SG		VPast	VFin	agr=3SG
PERS.1PL	k	VPast	VFin	agr=1PL
PERS.2PL	nIz	VPast	VFin	agr=2PL
PERS.3PL	lAr	VPast	VFin	agr=3PL
GER.DIKCE	DIkçA	VStem	GerAdvp	conv=ADVP:dikce;sub=TEMP
)";

inline constexpr const char* kSubcat = R"(# root	voice	args (role:case[|case][:opt][:indef];...)
ver	ACT	THEME:ACC:indef;GOAL:DAT
gel	ACT	GOAL:DAT:opt
git	ACT	GOAL:DAT:opt
pişir	ACT	THEME:ACC:indef
hızlan	ACT
bul	ACT	THEME:ACC:indef
oku	ACT	THEME:ACC:indef
gör	ACT	THEME:ACC:indef
al	ACT	THEME:ACC:indef;SOURCE:ABL:opt
yap	ACT	THEME:ACC:indef
koş	ACT
otur	ACT
bekle	ACT	THEME:ACC:opt:indef
)";

inline constexpr const char* kGrammar = R"(# id: LHS -> RHS... @equationProgram
# sentence level: order-free constituents, one per arity
S1: S -> XP @sentence
S2: S -> XP XP @sentence
S3: S -> XP XP XP @sentence
S4: S -> XP XP XP XP @sentence
S5: S -> XP XP XP XP XP @sentence
S6: S -> XP XP XP XP XP XP @sentence
# placeholder expansion
X1: XP -> NP @xp
X2: XP -> VP @xp
X3: XP -> ADVC @xp
X4: XP -> GERC @xp
# noun phrases
N1: NP -> N @np_lex
N2: NP -> PRON @np_lex
N3: NP -> ADJ @np_nominal
N4: NP -> ADJ NP @np_modify
N5: NP -> NP NP @np_poss
# verb phrases: optional qualitative adverb, optional indefinite object
V1: VP -> V @vp
V2: VP -> QADVP V @vp
V3: VP -> NP V @vp
V4: VP -> QADVP NP V @vp
# adverbials
A1: ADVC -> ADVP @advp_lex
Q1: QADVP -> ADJ @qadvp
# gerund adverbial clauses
G1: GERC -> XP ADVP @gerund_clause
G2: GERC -> XP XP ADVP @gerund_clause
G3: GERC -> XP XP XP ADVP @gerund_clause
G4: GERC -> XP XP XP XP ADVP @gerund_clause
G5: GERC -> XP XP XP XP XP ADVP @gerund_clause
G6: GERC -> XP XP XP XP XP XP ADVP @gerund_clause
)";

}  // namespace tlfg::seed
