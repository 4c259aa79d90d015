"""Irregular English inflection tables.

Each verb line is ``base past participle``; alternatives are joined by ``|``.
"""

_VERBS = """
arise arose arisen
awake awoke|awaked awoken|awaked
bear bore borne|born
beat beat beaten|beat
become became become
befall befell befallen
begin began begun
behold beheld beheld
bend bent bent
beset beset beset
bet bet|betted bet|betted
bid bade|bid bidden|bid
bind bound bound
bite bit bitten|bit
bleed bled bled
blow blew blown
break broke broken
breed bred bred
bring brought brought
broadcast broadcast broadcast
build built built
burn burnt|burned burnt|burned
burst burst burst
buy bought bought
cast cast cast
catch caught caught
choose chose chosen
cling clung clung
come came come
cost cost cost
creep crept crept
cut cut cut
deal dealt dealt
dig dug dug
dive dove|dived dived
draw drew drawn
dream dreamt|dreamed dreamt|dreamed
drink drank drunk
drive drove driven
dwell dwelt|dwelled dwelt|dwelled
eat ate eaten
fall fell fallen
feed fed fed
feel felt felt
fight fought fought
find found found
flee fled fled
fling flung flung
fly flew flown
forbid forbade|forbad forbidden
forecast forecast forecast
foresee foresaw foreseen
foretell foretold foretold
forget forgot forgotten|forgot
forgive forgave forgiven
forsake forsook forsaken
freeze froze frozen
get got gotten|got
give gave given
go went gone
grind ground ground
grow grew grown
hang hung|hanged hung|hanged
hear heard heard
hide hid hidden|hid
hit hit hit
hold held held
hurt hurt hurt
keep kept kept
kneel knelt|kneeled knelt|kneeled
knit knit|knitted knit|knitted
know knew known
lead led led
lean leant|leaned leant|leaned
leap leapt|leaped leapt|leaped
learn learnt|learned learnt|learned
leave left left
lend lent lent
let let let
lie lay lain
light lit|lighted lit|lighted
lose lost lost
make made made
mean meant meant
meet met met
mislead misled misled
mistake mistook mistaken
misunderstand misunderstood misunderstood
mow mowed mown|mowed
outdo outdid outdone
overcome overcame overcome
overdo overdid overdone
overhear overheard overheard
override overrode overridden
overrun overran overrun
oversee oversaw overseen
overtake overtook overtaken
overthrow overthrew overthrown
partake partook partaken
pay paid paid
plead pled|pleaded pled|pleaded
prove proved proven|proved
put put put
quit quit|quitted quit|quitted
read read read
rebuild rebuilt rebuilt
recast recast recast
redo redid redone
remake remade remade
repay repaid repaid
rethink rethought rethought
rewrite rewrote rewritten
rid rid rid
ride rode ridden
ring rang rung
rise rose risen
run ran run
say said said
see saw seen
seek sought sought
sell sold sold
send sent sent
set set set
sew sewed sewn|sewed
shake shook shaken
shear sheared shorn|sheared
shed shed shed
shine shone|shined shone|shined
shoot shot shot
show showed shown|showed
shrink shrank|shrunk shrunk
shut shut shut
sing sang sung
sink sank sunk
sit sat sat
slay slew slain
sleep slept slept
slide slid slid
sling slung slung
slit slit slit
smell smelt|smelled smelt|smelled
sow sowed sown|sowed
speak spoke spoken
speed sped|speeded sped|speeded
spell spelt|spelled spelt|spelled
spend spent spent
spill spilt|spilled spilt|spilled
spin spun spun
spit spat|spit spat|spit
split split split
spoil spoilt|spoiled spoilt|spoiled
spread spread spread
spring sprang|sprung sprung
stand stood stood
steal stole stolen
stick stuck stuck
sting stung stung
stink stank|stunk stunk
stride strode stridden
strike struck struck|stricken
string strung strung
strive strove|strived striven|strived
swear swore sworn
sweep swept swept
swell swelled swollen|swelled
swim swam swum
swing swung swung
take took taken
teach taught taught
tear tore torn
tell told told
think thought thought
throw threw thrown
thrust thrust thrust
tread trod trodden|trod
undergo underwent undergone
understand understood understood
undertake undertook undertaken
undo undid undone
uphold upheld upheld
upset upset upset
wake woke|waked woken|waked
wear wore worn
weave wove|weaved woven|weaved
weep wept wept
win won won
wind wound wound
withdraw withdrew withdrawn
withhold withheld withheld
withstand withstood withstood
wring wrung wrung
write wrote written
"""

# Forms not produced by the base/past/participle table.
_VERB_EXTRAS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be", "'m": "be", "'re": "be", "'s": "be",
    "art": "be", "wast": "be",
    "has": "have", "had": "have", "having": "have", "'ve": "have", "'d": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "goes": "go", "going": "go",
    "dies": "die", "died": "die", "dying": "die",
    "ties": "tie", "tied": "tie", "tying": "tie",
    "lying": "lie", "lies": "lie", "lied": "lie",
    "owed": "owe", "owing": "owe",
    "eyed": "eye", "eyeing": "eye",
    "ca": "can", "wo": "will", "sha": "shall",
}

_NOUNS = {
    "men": "man", "women": "woman", "children": "child", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "geese": "goose", "oxen": "ox",
    "lice": "louse", "people": "person",
    "analyses": "analysis", "crises": "crisis", "theses": "thesis",
    "hypotheses": "hypothesis", "diagnoses": "diagnosis", "syntheses": "synthesis",
    "parentheses": "parenthesis", "emphases": "emphasis", "axes": "axis",
    "phenomena": "phenomenon", "criteria": "criterion",
    "lives": "life", "wives": "wife", "knives": "knife", "leaves": "leaf",
    "halves": "half", "selves": "self", "wolves": "wolf", "shelves": "shelf",
    "thieves": "thief", "loaves": "loaf", "calves": "calf",
    "series": "series", "species": "species", "news": "news", "means": "means",
    "buses": "bus", "gases": "gas", "lenses": "lens", "cactuses": "cactus",
    "movies": "movie", "cookies": "cookie", "ties": "tie", "lies": "lie",
    "shoes": "shoe", "toes": "toe",
}


def _ing(base):
    if base.endswith("ie"):
        return base[:-2] + "ying"
    if base.endswith("e") and not base.endswith(("ee", "ye", "oe")):
        return base[:-1] + "ing"
    return None


def _build_verb_map():
    table = {}
    for line in _VERBS.strip().splitlines():
        base, past, participle = line.split()
        for form in past.split("|") + participle.split("|"):
            if form != base:
                table[form] = base
        ing = _ing(base)
        if ing is not None:
            table[ing] = base
    table.update(_VERB_EXTRAS)
    # A lemma must never itself be a key, or lemmatization would not be idempotent.
    return {form: lemma for form, lemma in table.items() if form not in set(table.values())}


IRREGULAR_VERBS = _build_verb_map()
IRREGULAR_NOUNS = dict(_NOUNS)
