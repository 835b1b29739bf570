#ifndef TWEETSENSE_DEFAULT_TAGGER_LEXICON_HPP_
#define TWEETSENSE_DEFAULT_TAGGER_LEXICON_HPP_

#include <string_view>

namespace tweetsense {

// Built-in tagger lexicon in the word<TAB>tag file format, ordered
// [suffix] fallback rules at the end. Same content ships as
// data/tagger_lexicon.tsv for users who want to extend it.
inline constexpr std::string_view kDefaultTaggerLexiconTsv = R"lex(# word<TAB>tag entries; lookup precedes capitalization and suffix rules
a	OTHER
abilities	NNS
ability	NN
able	JJ
ably	RB
about	OTHER
above	OTHER
abrupt	JJ
absent	JJ
absently	RB
absolute	JJ
abundant	JJ
abuse	NN
accident	NN
accidents	NNS
accomplishment	NN
accomplishments	NNS
account	NN
accounts	NNS
ache	NN
aches	NNS
achievement	NN
achievements	NNS
across	OTHER
act	VB
acted	VBD
acting	VBG
active	JJ
actor	NN
actors	NNS
actress	NN
actresses	NNS
actually	RB
add	VB
added	VBD
adding	VBG
address	NN
addresses	NNS
adequate	JJ
adult	NN
adults	NNS
advantage	NN
advantages	NNS
adventure	NN
adventures	NNS
advertisement	NN
advertisements	NNS
afraid	JJ
afraidly	RB
africa	NNP
africans	NNPS
after	OTHER
afternoon	NN
afternoons	NNS
again	RB
against	OTHER
aggressive	JJ
ago	RB
agree	VB
agreed	VBD
agreeing	VBG
agreement	NN
agreements	NNS
ah	OTHER
aim	NN
aims	NNS
air	NN
airport	NN
airports	NNS
algeria	NNP
alive	JJ
alively	RB
all	OTHER
allah	NNP
alley	NN
alleys	NNS
almond	NN
almonds	NNS
almost	RB
alphabet	NN
alphabets	NNS
already	RB
also	RB
although	OTHER
always	RB
am	OTHER
amazing	JJ
america	NNP
americans	NNPS
among	OTHER
amount	NN
amounts	NNS
amused	JJ
amusedly	RB
amusing	JJ
amusingly	RB
an	OTHER
analog	JJ
ancient	JJ
anciently	RB
and	OTHER
anger	NN
angle	NN
angles	NNS
angrily	RB
angry	JJ
animal	NN
animals	NNS
ankle	NN
ankles	NNS
announcement	NN
announcements	NNS
annoyed	JJ
annoyedly	RB
annoying	JJ
annoyingly	RB
another	OTHER
answer	NN
answered	VBD
answering	VBG
answers	NNS
ant	NN
antarctica	NNP
antique	JJ
ants	NNS
anxiety	NN
anxious	JJ
any	OTHER
anyway	RB
anywhere	RB
apart	RB
apartment	NN
apartments	NNS
ape	NN
apes	NNS
appalling	JJ
apparently	RB
appear	VB
appeared	VBD
appearing	VBG
apple	NN
apples	NNS
appointment	NN
appointments	NNS
april	NNP
are	OTHER
area	NN
areas	NNS
argentina	NNP
argue	VB
argued	VBD
arguing	VBG
argument	NN
arguments	NNS
arid	JJ
arm	NN
arms	NNS
around	OTHER
arrive	VB
arrived	VBD
arriving	VBG
art	NN
article	NN
articles	NNS
artificial	JJ
artist	NN
artists	NNS
as	OTHER
ash	NN
ashes	NNS
asia	NNP
asians	NNPS
aside	RB
ask	VB
asked	VBD
asking	VBG
asleep	JJ
asleeply	RB
aspect	NN
aspects	NNS
association	NN
associations	NNS
at	OTHER
ate	VBD
athens	NNP
atlanta	NNP
atmosphere	NN
atmospheres	NNS
atrocious	JJ
attachment	NN
attachments	NNS
attack	NN
attacked	VBD
attacking	VBG
attacks	NNS
attic	NN
attics	NNS
atypical	JJ
august	NNP
aunt	NN
aunts	NNS
australia	NNP
australians	NNPS
authentic	JJ
author	NN
authors	NNS
automatic	JJ
avalanche	NN
avalanches	NNS
avenue	NN
avenues	NNS
average	NN
averages	NNS
avoid	VB
avoided	VBD
avoiding	VBG
awake	JJ
awakely	RB
award	NN
awards	NNS
aware	JJ
awarely	RB
away	RB
awesome	JJ
awful	JJ
awkward	JJ
babies	NNS
baby	NN
back	RB
background	NN
backgrounds	NNS
backward	RB
bad	JJ
badly	RB
bag	NN
bags	NNS
bake	VB
baked	VBD
baker	NN
bakeries	NNS
bakers	NNS
bakery	NN
baking	VBG
ball	NN
ballet	NN
ballets	NNS
balls	NNS
banana	NN
bananas	NNS
band	NN
bands	NNS
bank	NN
banks	NNS
barbara	NNP
barber	NN
barbers	NNS
bare	JJ
barely	RB
base	NN
basement	NN
basements	NNS
bases	NNS
basket	NN
baskets	NNS
bat	NN
bathroom	NN
bathrooms	NNS
bats	NNS
batteries	NNS
battery	NN
battle	NN
battles	NNS
be	VB
beach	NN
beaches	NNS
bean	NN
beans	NNS
bear	NN
bears	NNS
beautiful	JJ
beautifully	RB
because	OTHER
become	VB
becomed	VBD
becoming	VBG
bed	NN
bedroom	NN
bedrooms	NNS
beds	NNS
bee	NN
beef	NN
been	OTHER
beer	NN
bees	NNS
before	OTHER
begin	VB
beginned	VBD
beginning	NN
beginnings	NNS
behave	VB
behaved	VBD
behaving	VBG
behind	OTHER
beijing	NNP
being	OTHER
belief	NN
beliefs	NNS
believe	VB
believed	VBD
believing	VBG
bellies	NNS
belly	NN
below	OTHER
belt	NN
belts	NNS
bench	NN
benches	NNS
bend	VB
bending	VBG
benefit	NN
benefits	NNS
bent	VBD
berlin	NNP
berries	NNS
berry	NN
beside	OTHER
best	JJS
bet	VB
better	JJR
betting	VBG
between	OTHER
beyond	OTHER
big	JJ
bigger	JJR
biggest	JJS
bigly	RB
bill	NN
billion	OTHER
bills	NNS
bind	VB
binding	VBG
biology	NN
bird	NN
birds	NNS
birthday	NN
birthdays	NNS
bit	NN
bite	VB
biting	VBG
bits	NNS
bitten	VBN
bitter	JJ
bitterly	RB
black	JJ
bland	JJ
blander	JJR
blandest	JJS
blanket	NN
blankets	NNS
blend	NN
blends	NNS
blew	VBD
blind	JJ
block	NN
blocks	NNS
blog	NN
blogs	NNS
blood	NN
blow	VB
blowing	VBG
blown	VBN
blue	JJ
blunt	JJ
bluntly	RB
board	NN
boards	NNS
bodies	NNS
body	NN
boil	VB
boiled	VBD
boiling	VBG
bold	JJ
bolder	JJR
boldest	JJS
bond	NN
bonds	NNS
bone	NN
bones	NNS
bonus	NN
bonuses	NNS
book	NN
books	NNS
boot	NN
boots	NNS
border	NN
borders	NNS
bored	JJ
boredly	RB
boring	JJ
boringly	RB
borrow	VB
borrowed	VBD
borrowing	VBG
boss	NN
bosses	NNS
boston	NNP
both	OTHER
bottle	NN
bottles	NNS
bottom	NN
bottoms	NNS
bought	VBD
bounce	VB
bounced	VBD
bouncing	VBG
bound	VBD
boundaries	NNS
boundary	NN
bow	VB
bowed	VBD
bowing	VBG
bowl	NN
bowls	NNS
box	NN
boxes	NNS
boy	NN
boys	NNS
bracelet	NN
bracelets	NNS
brain	NN
brains	NNS
brake	NN
brakes	NNS
branch	NN
branches	NNS
brand	NN
brands	NNS
brave	JJ
bravely	RB
braver	JJR
bravest	JJS
brazil	NNP
bread	NN
break	VB
breakfast	NN
breakfasts	NNS
breaking	VBG
breath	NN
breathe	VB
breathed	VBD
breathing	VBG
breaths	NNS
breed	NN
breeds	NNS
bridge	NN
bridges	NNS
brief	JJ
briefer	JJR
briefest	JJS
bright	JJ
brighter	JJR
brightest	JJS
brightly	RB
brilliant	JJ
bring	VB
bringing	VBG
britain	NNP
broke	VBD
broken	JJ
brokenly	RB
brother	NN
brothers	NNS
brought	VBD
brown	JJ
brush	NN
brushes	NNS
btw	OTHER
bucket	NN
buckets	NNS
buddha	NNP
budget	NN
budgets	NNS
build	VB
building	NN
buildings	NNS
built	VBD
burger	NN
burgers	NNS
buried	VBD
burn	VB
burned	VBD
burning	VBG
burst	VB
bursting	VBG
bury	VB
burying	VBG
bus	NN
bush	NN
bushes	NNS
busier	JJR
busiest	JJS
busily	RB
business	NN
businesses	NNS
busy	JJ
but	OTHER
butcher	NN
butchers	NNS
butter	NN
butterflies	NNS
butterfly	NN
button	NN
buttons	NNS
buy	VB
buying	VBG
by	OTHER
cabbage	NN
cabbages	NNS
cabin	NN
cabins	NNS
cable	NN
cables	NNS
cafe	NN
cafes	NNS
cairo	NNP
cake	NN
cakes	NNS
calendar	NN
calendars	NNS
call	VB
called	VBD
calling	VBG
calm	JJ
calmer	JJR
calmest	JJS
calmly	RB
came	VBD
camel	NN
camels	NNS
camera	NN
cameras	NNS
campaign	NN
campaigns	NNS
can	OTHER
canada	NNP
candidate	NN
candidates	NNS
candies	NNS
candle	NN
candles	NNS
candy	NN
cap	NN
capacities	NNS
capacity	NN
capital	NN
capitals	NNS
caps	NNS
career	NN
careers	NNS
careful	JJ
carefully	RB
careless	JJ
carelessly	RB
carpet	NN
carpets	NNS
carried	VBD
carrot	NN
carrots	NNS
carry	VB
carrying	VBG
case	NN
cases	NNS
cash	NN
castle	NN
castles	NNS
casual	JJ
cat	NN
catch	VB
catching	VBG
categories	NNS
category	NN
cats	NNS
caught	VBD
cause	NN
caused	VBD
causes	NNS
causing	VBG
cave	NN
caves	NNS
ceiling	NN
ceilings	NNS
celebrate	VB
celebrated	VBD
celebrating	VBG
celebration	NN
celebrations	NNS
cent	NN
center	NN
centers	NNS
cents	NNS
certain	JJ
certainly	RB
certificate	NN
certificates	NNS
chain	NN
chains	NNS
chair	NN
chairs	NNS
chance	NN
chances	NNS
change	NN
changed	VBD
changes	NNS
changing	VBG
chapter	NN
chapters	NNS
character	NN
characters	NNS
charge	VB
charged	VBD
charger	NN
chargers	NNS
charging	VBG
charles	NNP
charming	JJ
charmingly	RB
chase	VB
chased	VBD
chasing	VBG
chat	NN
chats	NNS
cheap	JJ
cheaper	JJR
cheapest	JJS
cheaply	RB
cheat	VB
cheated	VBD
cheating	VBG
check	VB
checked	VBD
checking	VBG
cheek	NN
cheeks	NNS
cheer	VB
cheered	VBD
cheerful	JJ
cheering	VBG
cheese	NN
chef	NN
chefs	NNS
chemistry	NN
cherries	NNS
cherry	NN
chest	NN
chests	NNS
chew	VB
chewed	VBD
chewing	VBG
chicago	NNP
chicken	NN
chief	JJ
child	NN
children	NNS
chill	NN
chills	NNS
chin	NN
china	NNP
chins	NNS
chocolate	NN
choice	NN
choices	NNS
choir	NN
choirs	NNS
choose	VB
choosing	VBG
chose	VBD
chosen	VBN
christmas	NNP
church	NN
churches	NNS
cinema	NN
cinemas	NNS
circle	NN
circles	NNS
cities	NNS
citizen	NN
citizens	NNS
city	NN
claim	VB
claimed	VBD
claiming	VBG
clap	VB
clapped	VBD
clapping	VBG
class	NN
classes	NNS
classic	JJ
classical	JJ
classroom	NN
classrooms	NNS
clean	JJ
cleaner	JJR
cleanest	JJS
cleanly	RB
clear	JJ
clearer	JJR
clearest	JJS
clearly	RB
clerk	NN
clerks	NNS
clever	JJ
cleverer	JJR
cleverest	JJS
cleverly	RB
client	NN
clients	NNS
cliff	NN
cliffs	NNS
climate	NN
climax	NN
climaxes	NNS
climb	VB
climbed	VBD
climbing	VBG
clinic	NN
clinics	NNS
clinton	NNP
clock	NN
clocks	NNS
close	VB
closed	JJ
closedly	RB
closing	VBG
cloth	NN
cloud	NN
cloudier	JJR
cloudiest	JJS
clouds	NNS
cloudy	JJ
club	NN
clubs	NNS
clue	NN
clues	NNS
clumsy	JJ
coach	NN
coaches	NNS
coal	NN
coast	NN
coasts	NNS
coat	NN
coats	NNS
cocktail	NN
cocktails	NNS
coconut	NN
coconuts	NNS
code	NN
codes	NNS
coffee	NN
coin	NN
coins	NNS
cold	JJ
colder	JJR
coldest	JJS
coldly	RB
coldness	NN
collect	VB
collected	VBD
collecting	VBG
college	NN
colleges	NNS
colorful	JJ
colourful	JJ
column	NN
columns	NNS
comb	NN
combination	NN
combinations	NNS
combs	NNS
come	VB
comfort	NN
comfortable	JJ
comfortably	RB
comforts	NNS
coming	VBG
comment	NN
comments	NNS
commerce	NN
committee	NN
committees	NNS
common	JJ
commoner	JJR
commonest	JJS
commonly	RB
communities	NNS
community	NN
companies	NNS
company	NN
compare	VB
compared	VBD
comparing	VBG
comparison	NN
comparisons	NNS
complain	VB
complained	VBD
complaining	VBG
complete	JJ
completely	RB
complex	JJ
complexly	RB
computer	NN
computers	NNS
concept	NN
concepts	NNS
concern	NN
concerns	NNS
concert	NN
concerts	NNS
conclusion	NN
conclusions	NNS
condition	NN
conditions	NNS
conference	NN
conferences	NNS
confirm	VB
confirmed	VBD
confirming	VBG
confused	JJ
confusedly	RB
confusing	JJ
confusingly	RB
congress	NN
congresses	NNS
connect	VB
connected	VBD
connecting	VBG
connection	NN
connections	NNS
consequence	NN
consequences	NNS
consider	VB
considered	VBD
considering	VBG
constant	JJ
constitution	NN
constitutions	NNS
contain	VB
contained	VBD
containing	VBG
continent	NN
continents	NNS
continue	VB
continued	VBD
continuing	VBG
contract	NN
contracts	NNS
contrast	NN
contrasts	NNS
convenient	JJ
conveniently	RB
conversation	NN
conversations	NNS
cook	NN
cookie	NN
cookies	NNS
cooks	NNS
cool	JJ
cooler	JJR
coolest	JJS
coolly	RB
copied	VBD
copies	NNS
copper	NN
copy	NN
copying	VBG
corn	NN
corner	NN
corners	NNS
corns	NNS
correct	VB
corrected	VBD
correcting	VBG
corruption	NN
cost	NN
costs	NNS
cotton	NN
couch	NN
couches	NNS
could	OTHER
council	NN
councils	NNS
count	VB
counted	VBD
counting	VBG
countries	NNS
country	NN
couple	NN
couples	NNS
coupon	NN
coupons	NNS
courage	NN
course	NN
courses	NNS
court	NN
courts	NNS
cousin	NN
cousins	NNS
cover	VB
coverred	VBD
coverring	VBG
cow	NN
cows	NNS
crab	NN
crabs	NNS
crash	VB
crashed	VBD
crashing	VBG
crawl	VB
crawled	VBD
crawling	VBG
crazier	JJR
craziest	JJS
crazily	RB
crazy	JJ
cream	NN
create	VB
created	VBD
creating	VBG
creativity	NN
credit	NN
credits	NNS
creepy	JJ
crew	NN
crews	NNS
cried	VBD
cries	NNS
crime	NN
crimes	NNS
crisis	NN
crisises	NNS
criterion	NN
criterions	NNS
crop	NN
crops	NNS
cross	VB
crossed	VBD
crossing	VBG
crow	NN
crowded	JJ
crown	NN
crowns	NNS
crows	NNS
cruel	JJ
cruelly	RB
cruelties	NNS
cruelty	NN
cry	NN
crying	VBG
cube	NN
cubes	NNS
culture	NN
cultures	NNS
cup	NN
cups	NNS
cure	NN
cures	NNS
curious	JJ
curiously	RB
current	JJ
currently	RB
curtain	NN
curtains	NNS
curve	NN
curves	NNS
custom	NN
customer	NN
customers	NNS
customs	NNS
cut	VB
cutting	VBG
cyclone	NN
cyclones	NNS
dallas	NNP
damage	NN
damaged	VBD
damages	NNS
damaging	VBG
damp	JJ
dance	VB
danced	VBD
dancer	NN
dancers	NNS
dancing	VBG
danger	NN
dangerous	JJ
dangerously	RB
dangers	NNS
dare	OTHER
dared	VBD
daring	VBG
dark	JJ
darker	JJR
darkest	JJS
darkly	RB
data	NN
database	NN
databases	NNS
daughter	NN
daughters	NNS
david	NNP
day	NN
days	NNS
dead	JJ
deadly	RB
deaf	JJ
deal	NN
deals	NNS
dear	JJ
dearer	JJR
dearest	JJS
dearly	RB
debate	NN
debates	NNS
debt	NN
debts	NNS
december	NNP
decide	VB
decided	VBD
deciding	VBG
decision	NN
decisions	NNS
decrease	NN
decreases	NNS
deep	JJ
deeper	JJR
deepest	JJS
deeply	RB
deer	NN
deers	NNS
defeat	NN
defeats	NNS
defense	NN
defenses	NNS
definitely	RB
degree	NN
degrees	NNS
delhi	NNP
delicate	JJ
delicious	JJ
delight	NN
delightful	JJ
delights	NNS
deliver	VB
delivered	VBD
deliveries	NNS
delivering	VBG
delivery	NN
demand	NN
demanded	VBD
demanding	VBG
demands	NNS
democracy	NN
denied	VBD
dense	JJ
denser	JJR
densest	JJS
densities	NNS
density	NN
denver	NNP
deny	VB
denying	VBG
department	NN
departments	NNS
depth	NN
depths	NNS
describe	VB
described	VBD
describing	VBG
desert	NN
deserted	JJ
deserts	NNS
deserve	VB
deserved	VBD
deserving	VBG
design	NN
designed	VBD
designing	VBG
designs	NNS
desk	NN
desks	NNS
despair	NN
despairs	NNS
dessert	NN
desserts	NNS
destroy	VB
destroyed	VBD
destroying	VBG
detail	NN
details	NNS
develop	VB
developed	VBD
developing	VBG
development	NN
developments	NNS
dew	NN
dews	NNS
dialogue	NN
dialogues	NNS
did	OTHER
die	VB
died	VBD
diet	NN
diets	NNS
difference	NN
differences	NNS
different	JJ
differently	RB
difficult	JJ
difficultly	RB
dig	VB
digging	VBG
digit	NN
digital	JJ
digits	NNS
dignities	NNS
dignity	NN
diligent	JJ
dinner	NN
dinners	NNS
diploma	NN
diplomas	NNS
direction	NN
directions	NNS
director	NN
directors	NNS
dirt	NN
dirtier	JJR
dirtiest	JJS
dirtily	RB
dirts	NNS
dirty	JJ
disadvantage	NN
disadvantages	NNS
disagree	VB
disagreed	VBD
disagreeing	VBG
disappear	VB
disappeared	VBD
disappearing	VBG
disappointing	JJ
disaster	NN
disasters	NNS
discover	VB
discovered	VBD
discovering	VBG
discuss	VB
discussed	VBD
discussing	VBG
discussion	NN
discussions	NNS
disease	NN
diseases	NNS
disgusting	JJ
dishonest	JJ
dishonestly	RB
dislike	VB
disliked	VBD
disliking	VBG
distance	NN
distances	NNS
district	NN
districts	NNS
divide	VB
divided	VBD
dividing	VBG
division	NN
divisions	NNS
dizzier	JJR
dizziest	JJS
dizzy	JJ
do	OTHER
doctor	NN
doctors	NNS
document	NN
documents	NNS
does	OTHER
dog	NN
dogs	NNS
doing	VBG
dollar	NN
dollars	NNS
dolphin	NN
dolphins	NNS
done	OTHER
donkey	NN
donkeys	NNS
door	NN
doors	NNS
double	JJ
doubt	NN
doubts	NNS
down	OTHER
drab	JJ
draft	NN
drafts	NNS
drag	VB
dragged	VBD
dragging	VBG
drank	VBD
draw	VB
drawback	NN
drawbacks	NNS
drawing	NN
drawings	NNS
drawn	VBN
dreadful	JJ
dream	NN
dreamed	VBD
dreaming	VBG
dreams	NNS
dress	NN
dressed	JJ
dresses	NNS
dressing	VBG
drew	VBD
drier	JJR
driest	JJS
drily	RB
drink	NN
drinkable	JJ
drinking	VBG
drinks	NNS
drive	VB
driven	VBN
driver	NN
drivers	NNS
driving	VBG
drop	NN
dropped	VBD
dropping	VBG
drops	NNS
drought	NN
drove	VBD
drug	NN
drugs	NNS
drum	NN
drums	NNS
drunk	VBN
dry	JJ
duck	NN
ducks	NNS
dug	VBD
dull	JJ
duller	JJR
dullest	JJS
dullly	RB
dumb	JJ
dumbly	RB
duplicate	NN
duplicates	NNS
durable	JJ
during	OTHER
dust	NN
duties	NNS
duty	NN
dying	VBG
each	OTHER
eager	JJ
eagerrer	JJR
eagerrest	JJS
eagle	NN
eagles	NNS
ear	NN
earlier	JJR
earliest	JJS
early	JJ
earn	VB
earned	VBD
earning	VBG
earring	NN
earrings	NNS
ears	NNS
earth	NN
earthquake	NN
earthquakes	NNS
earths	NNS
easier	JJR
easiest	JJS
easily	RB
easter	NNP
easy	JJ
eat	VB
eaten	VBN
eating	VBG
echo	NN
echoes	NNS
economy	NN
edge	NN
edges	NNS
edible	JJ
edition	NN
editions	NNS
education	NN
effect	NN
effective	JJ
effects	NNS
efficient	JJ
egg	NN
eggs	NNS
egypt	NNP
eight	OTHER
either	OTHER
elbow	NN
elbows	NNS
elder	JJR
eldest	JJS
election	NN
elections	NNS
electric	JJ
electricity	NN
electronic	JJ
elegant	JJ
element	NN
elements	NNS
elephant	NN
elephants	NNS
elevator	NN
elevators	NNS
eleven	OTHER
elizabeth	NNP
else	RB
email	NN
emails	NNS
emergencies	NNS
emergency	NN
emoticon	NN
emoticons	NNS
empathies	NNS
empathy	NN
employee	NN
employees	NNS
employer	NN
employers	NNS
emptily	RB
empty	JJ
encourage	VB
encouraged	VBD
encouraging	VBG
end	VB
ended	VBD
ending	NN
endings	NNS
endless	JJ
enemies	NNS
enemy	NN
energy	NN
engine	NN
engineer	NN
engineers	NNS
engines	NNS
england	NNP
english	NN
enjoy	VB
enjoyed	VBD
enjoying	VBG
enormous	JJ
enormously	RB
enough	RB
enter	VB
enterred	VBD
enterring	VBG
entire	JJ
entirely	RB
envelope	NN
envelopes	NNS
envies	NNS
envious	JJ
environment	NN
environments	NNS
envy	NN
equal	JJ
equality	NN
equally	RB
error	NN
errors	NNS
eruption	NN
eruptions	NNS
escape	VB
escaped	VBD
escaping	VBG
essay	NN
essays	NNS
eternal	JJ
euro	NN
euroes	NNS
europe	NNP
europeans	NNPS
even	RB
evening	NN
evenings	NNS
event	NN
events	NNS
ever	RB
every	OTHER
everywhere	RB
evidence	NN
exam	NN
examine	VB
examined	VBD
examining	VBG
example	NN
examples	NNS
exams	NNS
excellent	JJ
excited	JJ
excitedly	RB
exciting	JJ
excitingly	RB
exercise	NN
exercises	NNS
exist	VB
existed	VBD
existing	VBG
expect	VB
expected	VBD
expecting	VBG
expensive	JJ
expensively	RB
explain	VB
explained	VBD
explaining	VBG
explore	VB
explored	VBD
exploring	VBG
express	VB
expressed	VBD
expressing	VBG
extra	JJ
extraordinary	JJ
extremely	RB
eye	NN
eyebrow	NN
eyebrows	NNS
eyes	NNS
fabulous	JJ
face	NN
facebook	NNP
faces	NNS
fact	NN
factor	NN
factories	NNS
factors	NNS
factory	NN
facts	NNS
fail	VB
failed	VBD
failing	VBG
failure	NN
failures	NNS
fair	JJ
fairer	JJR
fairest	JJS
fairly	RB
faith	NN
faiths	NNS
fake	JJ
fakely	RB
fall	NN
fallen	VBN
falling	VBG
falls	NNS
false	JJ
falsely	RB
fame	NN
fames	NNS
families	NNS
family	NN
famous	JJ
famously	RB
fan	NN
fancier	JJR
fanciest	JJS
fancy	JJ
fans	NNS
fantastic	JJ
far	RB
fare	NN
fares	NNS
farm	NN
farmer	NN
farmers	NNS
farms	NNS
farther	RBR
fashion	NN
fast	JJ
faster	JJR
fastest	JJS
fastly	RB
fat	JJ
father	NN
fathers	NNS
fatigue	NN
fatly	RB
fatter	JJR
fattest	JJS
fault	NN
faults	NNS
fear	NN
feared	VBD
fearing	VBG
feature	NN
features	NNS
february	NNP
fed	VBD
fee	NN
feed	NN
feeding	VBG
feeds	NNS
feel	VB
feeling	VBG
fees	NNS
feet	NNS
fell	VBD
felt	VBD
fence	NN
fences	NNS
festival	NN
festivals	NNS
fever	NN
fevers	NNS
few	OTHER
field	NN
fields	NNS
fierce	JJ
fiercely	RB
fiercer	JJR
fiercest	JJS
fifty	OTHER
fight	NN
fighting	VBG
fights	NNS
figure	NN
figures	NNS
file	NN
files	NNS
fill	VB
filled	VBD
filling	VBG
film	NN
films	NNS
final	JJ
find	VB
finding	VBG
fine	JJ
finely	RB
fines	NNS
finger	NN
fingers	NNS
finish	VB
finished	VBD
finishing	VBG
fire	NN
firm	JJ
firmer	JJR
firmest	JJS
firmly	RB
firms	NNS
first	OTHER
fish	NN
fit	VB
fitness	NN
fitted	VBD
fitting	VBG
five	OTHER
fix	VB
fixed	VBD
fixing	VBG
flame	NN
flames	NNS
flat	JJ
flatly	RB
flatter	JJR
flattest	JJS
flaw	NN
flaws	NNS
flew	VBD
flies	NNS
flimsy	JJ
flood	NN
floods	NNS
floor	NN
floors	NNS
flower	NN
flowers	NNS
flown	VBN
flute	NN
flutes	NNS
fly	NN
flying	VBG
fog	NN
foggy	JJ
fold	VB
folded	VBD
folder	NN
folders	NNS
folding	VBG
follow	VB
followed	VBD
follower	NN
followers	NNS
following	VBG
fond	JJ
fonder	JJR
fondest	JJS
food	NN
foods	NNS
foolish	JJ
foolishly	RB
foot	NN
for	OTHER
force	NN
forced	VBD
forces	NNS
forcing	VBG
forehead	NN
foreheads	NNS
foreign	JJ
foreignly	RB
forest	NN
forests	NNS
forever	RB
forgave	VBD
forget	VB
forgeting	VBG
forgive	VB
forgiven	VBN
forgiving	VBG
forgot	VBD
forgotten	VBN
fork	NN
forks	NNS
form	NN
formal	JJ
former	JJ
formerly	RB
forms	NNS
forty	OTHER
forum	NN
forums	NNS
forward	RB
fought	VBD
found	VBD
foundation	NN
foundations	NNS
four	OTHER
fox	NN
foxes	NNS
fraction	NN
fractions	NNS
fragile	JJ
france	NNP
fraud	NN
frauds	NNS
free	JJ
freedom	NN
freely	RB
freer	JJR
freest	JJS
freeze	VB
freezer	NN
freezers	NNS
freezing	VBG
fresh	JJ
fresher	JJR
freshest	JJS
freshly	RB
friday	NNP
fridge	NN
fridges	NNS
friend	NN
friendly	JJ
friends	NNS
frightening	JJ
frog	NN
frogs	NNS
from	OTHER
front	NN
fronts	NNS
frost	NN
frosts	NNS
froze	VBD
frozen	JJ
frozenly	RB
frugal	JJ
fruit	NN
fruits	NNS
fuel	NN
full	JJ
fuller	JJR
fullest	JJS
fullly	RB
fully	RB
fun	NN
funeral	NN
funerals	NNS
funnier	JJR
funniest	JJS
funnily	RB
funny	JJ
furniture	NN
further	JJR
furthest	JJS
future	JJ
futurely	RB
gain	NN
gains	NNS
game	NN
games	NNS
gap	NN
gaps	NNS
garage	NN
garages	NNS
garden	NN
gardens	NNS
garlic	NN
garlics	NNS
gas	NN
gate	NN
gates	NNS
gather	VB
gathered	VBD
gathering	VBG
gave	VBD
geese	NNS
general	JJ
generally	RB
generous	JJ
genre	NN
genres	NNS
gentle	JJ
gentleman	NN
gentlemans	NNS
gently	RB
genuine	JJ
geography	NN
germany	NNP
get	VB
getting	VBG
giant	JJ
giantly	RB
gift	NN
gifts	NNS
giraffe	NN
giraffes	NNS
girl	NN
girls	NNS
give	VB
given	VBN
giving	VBG
glad	JJ
gladly	RB
glass	NN
glassy	JJ
global	JJ
globally	RB
gloomier	JJR
gloomiest	JJS
gloomy	JJ
glories	NNS
glory	NN
glove	NN
gloves	NNS
go	VB
goal	NN
goals	NNS
goat	NN
goats	NNS
god	NN
gods	NNS
going	VBG
gold	NN
golden	JJ
gone	VBN
good	JJ
goodly	RB
goods	NN
goodses	NNS
google	NNP
goose	NN
gorgeous	JJ
gorilla	NN
gorillas	NNS
gossip	NN
gossips	NNS
got	VBD
gotten	VBN
government	NN
governments	NNS
graceful	JJ
grade	NN
grades	NNS
gradual	JJ
grammar	NN
grandfather	NN
grandfathers	NNS
grandmother	NN
grandmothers	NNS
grape	NN
grapes	NNS
grass	NN
grasses	NNS
grateful	JJ
gray	JJ
great	JJ
greatly	RB
greece	NNP
greedier	JJR
greediest	JJS
greedy	JJ
green	JJ
greet	VB
greeted	VBD
greeting	VBG
grew	VBD
grey	JJ
grief	NN
griefs	NNS
gross	JJ
ground	NN
grounds	NNS
group	NN
groups	NNS
grow	VB
growing	VBG
grown	VBN
growth	NN
growths	NNS
grumpier	JJR
grumpiest	JJS
grumpy	JJ
guard	NN
guarded	VBD
guarding	VBG
guards	NNS
guess	VB
guessed	VBD
guessing	VBG
guest	NN
guests	NNS
guide	VB
guided	VBD
guiding	VBG
guilt	NN
guiltily	RB
guilty	JJ
guitar	NN
guitars	NNS
guy	NN
guys	NNS
gym	NN
gyms	NNS
habit	NN
habits	NNS
had	OTHER
hair	NN
half	NN
halloween	NNP
hallway	NN
hallways	NNS
halves	NNS
hammer	NN
hammers	NNS
hamster	NN
hamsters	NNS
hand	NN
handle	NN
handles	NNS
hands	NNS
handsome	JJ
handsomely	RB
hang	VB
hanging	VBG
happen	VB
happened	VBD
happening	VBG
happier	JJR
happiest	JJS
happily	RB
happiness	NN
happy	JJ
harbor	NN
harbors	NNS
hard	JJ
harder	JJR
hardest	JJS
hardly	RB
harm	NN
harmful	JJ
harmfully	RB
harmless	JJ
harmlessly	RB
harms	NNS
harsh	JJ
harsher	JJR
harshest	JJS
harvest	NN
harvests	NNS
has	OTHER
hashtag	NN
hashtags	NNS
hat	NN
hate	NN
hated	VBD
hating	VBG
hats	NNS
haunted	JJ
have	OTHER
having	OTHER
hawk	NN
hawks	NNS
he	OTHER
head	NN
headphone	NN
headphones	NNS
heads	NNS
health	NN
healthier	JJR
healthiest	JJS
healthily	RB
healthy	JJ
hear	VB
heard	VBD
hearing	VBG
heart	NN
hearts	NNS
heat	NN
heavier	JJR
heaviest	JJS
heavily	RB
heavy	JJ
heel	NN
heels	NNS
height	NN
heights	NNS
held	VBD
hello	OTHER
helmet	NN
helmets	NNS
help	VB
helped	VBD
helpful	JJ
helpfully	RB
helping	VBG
her	OTHER
here	RB
hero	NN
heroes	NNS
hers	OTHER
herself	OTHER
hey	OTHER
hi	OTHER
hid	VBD
hidden	VBN
hide	VB
hiding	VBG
high	JJ
higher	JJR
highest	JJS
highly	RB
highway	NN
highways	NNS
hill	NN
hills	NNS
him	OTHER
himself	OTHER
hip	NN
hips	NNS
his	OTHER
history	NN
hit	VB
hitting	VBG
hold	VB
holding	VBG
holiday	NN
holidays	NNS
hollow	JJ
home	NN
homes	NNS
homework	NN
honest	JJ
honesties	NNS
honestly	RB
honesty	NN
honey	NN
honor	NN
honors	NNS
hope	NN
hoped	VBD
hopeful	JJ
hopeless	JJ
hopes	NNS
hoping	VBG
horrible	JJ
horse	NN
horses	NNS
hospital	NN
hospitals	NNS
host	NN
hosts	NNS
hot	JJ
hotel	NN
hotels	NNS
hotly	RB
hotter	JJR
hottest	JJS
hour	NN
hours	NNS
house	NN
houses	NNS
houston	NNP
how	OTHER
however	RB
huge	JJ
hugely	RB
huger	JJR
hugest	JJS
humble	JJ
humbly	RB
humid	JJ
humidity	NN
humor	NN
humors	NNS
hundred	OTHER
hung	VBD
hunger	NN
hungrier	JJR
hungriest	JJS
hungry	JJ
hunt	VB
hunted	VBD
hunting	VBG
hurricane	NN
hurricanes	NNS
hurried	VBD
hurry	VB
hurrying	VBG
hurt	VB
hurting	VBG
husband	NN
husbands	NNS
hut	NN
huts	NNS
i	OTHER
ice	NN
idea	NN
ideas	NNS
if	OTHER
ill	JJ
illegal	JJ
illegally	RB
illly	RB
illness	NN
illnesses	NNS
imagination	NN
imagine	VB
imagined	VBD
imagining	VBG
immediate	JJ
immigrant	NN
immigrants	NNS
immoral	JJ
immorally	RB
impatient	JJ
imperfect	JJ
imperfectly	RB
important	JJ
importantly	RB
impossible	JJ
impossibly	RB
improve	VB
improved	VBD
improvement	NN
improvements	NNS
improving	VBG
in	OTHER
inadequate	JJ
incident	NN
incidents	NNS
include	VB
included	VBD
including	VBG
income	NN
incomes	NNS
incomplete	JJ
incompletely	RB
inconvenient	JJ
inconveniently	RB
increase	NN
increased	VBD
increases	NNS
increasing	VBG
incredible	JJ
indeed	RB
index	NN
indexes	NNS
india	NNP
industries	NNS
industry	NN
inefficient	JJ
inferior	JJ
information	NN
initial	JJ
injuries	NNS
injury	NN
inn	NN
innocent	JJ
innocently	RB
inns	NNS
insect	NN
insects	NNS
inside	OTHER
insist	VB
insisted	VBD
insisting	VBG
instagram	NNP
instance	NN
instances	NNS
instant	JJ
instead	RB
instrument	NN
instruments	NNS
insufficient	JJ
intelligence	NN
intend	VB
intended	VBD
intending	VBG
intention	NN
intentions	NNS
interesting	JJ
interestingly	RB
internet	NN
internets	NNS
interview	NN
interviews	NNS
into	OTHER
introduce	VB
introduced	VBD
introducing	VBG
introduction	NN
introductions	NNS
invaluable	JJ
invent	VB
invented	VBD
inventing	VBG
invisible	JJ
invisibly	RB
invite	VB
invited	VBD
inviting	VBG
invoice	NN
invoices	NNS
ireland	NNP
iron	NN
is	OTHER
island	NN
islands	NNS
it	OTHER
italy	NNP
item	NN
items	NNS
its	OTHER
itself	OTHER
jacket	NN
jackets	NNS
jail	NN
jails	NNS
jam	NN
james	NNP
jams	NNS
january	NNP
japan	NNP
jar	NN
jars	NNS
jealous	JJ
jealousies	NNS
jealousy	NN
jeans	NN
jeanses	NNS
jefferson	NNP
jennifer	NNP
jessica	NNP
jesus	NNP
job	NN
jobs	NNS
john	NNP
join	VB
joined	VBD
joining	VBG
joke	NN
jokes	NNS
jollier	JJR
jolliest	JJS
jolly	JJ
joseph	NNP
journal	NN
journals	NNS
journey	NN
journeys	NNS
joy	NN
judge	NN
judges	NNS
judgment	NN
judgments	NNS
juice	NN
juicier	JJR
juiciest	JJS
juicy	JJ
july	NNP
jump	VB
jumped	VBD
jumping	VBG
june	NNP
jungle	NN
jungles	NNS
just	RB
justice	NN
karen	NNP
keen	JJ
keener	JJR
keenest	JJS
keep	VB
keeping	VBG
kennedy	NNP
kenya	NNP
kept	VBD
key	NN
keyboard	NN
keyboards	NNS
keys	NNS
kick	VB
kicked	VBD
kicking	VBG
kid	NN
kidney	NN
kidneys	NNS
kids	NNS
kill	VB
killed	VBD
killing	VBG
kind	JJ
kinder	JJR
kindest	JJS
kindly	RB
kindness	NN
kindnesses	NNS
king	NN
kingdom	NN
kingdoms	NNS
kings	NNS
kiss	NN
kissed	VBD
kissing	VBG
kitchen	NN
kitchens	NNS
knee	NN
knees	NNS
knew	VBD
knife	NN
knives	NNS
knock	VB
knocked	VBD
knocking	VBG
know	VB
knowing	VBG
knowledge	NN
known	VBN
korea	NNP
label	NN
labels	NNS
ladies	NNS
lady	NN
lagos	NNP
laid	VBD
lain	VBN
lake	NN
lakes	NNS
lame	JJ
lamp	NN
lamps	NNS
land	NN
landed	VBD
landing	VBG
landlord	NN
landlords	NNS
lands	NNS
landscape	NN
landscapes	NNS
landslide	NN
landslides	NNS
lane	NN
lanes	NNS
language	NN
languages	NNS
laptop	NN
laptops	NNS
large	JJ
largely	RB
larger	JJR
largest	JJS
last	OTHER
lasted	VBD
lasting	VBG
late	JJ
lately	RB
later	RBR
latest	JJS
laugh	VB
laughed	VBD
laughing	VBG
laughter	NN
laughters	NNS
lavish	JJ
law	NN
lawful	JJ
laws	NNS
lawyer	NN
lawyers	NNS
lay	VB
layer	NN
layers	NNS
laying	VBG
lazy	JJ
lead	VB
leaded	VBD
leader	NN
leaders	NNS
leading	VBG
leaf	NN
learn	VB
learning	VBG
learnt	VBD
least	JJS
leather	NN
leave	VB
leaves	NNS
leaving	VBG
lecture	NN
lectures	NNS
left	VBD
leg	NN
legal	JJ
legally	RB
legs	NNS
lemon	NN
lemons	NNS
lend	VB
lending	VBG
length	NN
lengthier	JJR
lengthiest	JJS
lengths	NNS
lengthy	JJ
lenient	JJ
lent	VBD
less	JJR
lesser	JJR
lesson	NN
lessons	NNS
let	VB
letter	NN
letters	NNS
letting	VBG
lettuce	NN
lettuces	NNS
level	NN
levels	NNS
liberty	NN
libraries	NNS
library	NN
libya	NNP
license	NN
licenses	NNS
lie	NN
lies	NNS
lift	VB
lifted	VBD
lifting	VBG
light	JJ
lighter	JJR
lightest	JJS
lightly	RB
lightning	NN
like	NN
liked	VBD
likely	JJ
likes	NNS
liking	VBG
lime	NN
limes	NNS
limit	NN
limits	NNS
lincoln	NNP
linda	NNP
line	NN
lines	NNS
link	NN
linked	VBD
linking	VBG
links	NNS
lion	NN
lions	NNS
lip	NN
lips	NNS
liquid	JJ
liquidly	RB
list	NN
listen	VB
listened	VBD
listening	VBG
lists	NNS
literature	NN
little	JJ
littler	JJR
littlest	JJS
littly	RB
live	VB
lived	VBD
lively	JJ
liver	NN
livers	NNS
living	VBG
lizard	NN
lizards	NNS
load	VB
loaded	VBD
loading	VBG
loan	NN
loans	NNS
lobster	NN
lobsters	NNS
local	JJ
locally	RB
location	NN
locations	NNS
lock	NN
locked	VBD
locking	VBG
locks	NNS
logic	NN
logics	NNS
lol	OTHER
london	NNP
lonelier	JJR
loneliest	JJS
lonely	JJ
long	JJ
longer	JJR
longest	JJS
longly	RB
look	VB
looked	VBD
looking	VBG
loose	JJ
loosely	RB
looser	JJR
loosest	JJS
lose	VB
losing	VBG
loss	NN
losses	NNS
lost	VBD
lot	NN
lots	NNS
loud	JJ
louder	JJR
loudest	JJS
loudly	RB
lousy	JJ
love	NN
loved	VBD
lovelier	JJR
loveliest	JJS
lovely	JJ
loving	VBG
low	JJ
lower	JJR
lowest	JJS
lowly	RB
loyal	JJ
loyally	RB
loyalties	NNS
loyalty	NN
luggage	NN
lunch	NN
lunches	NNS
lung	NN
lungs	NNS
luxurious	JJ
lying	VBG
machine	NN
machines	NNS
mad	JJ
made	VBD
madly	RB
madrid	NNP
magazine	NN
magazines	NNS
magical	JJ
magnificent	JJ
mail	NN
mails	NNS
main	JJ
mainly	RB
major	JJ
make	VB
making	VBG
mall	NN
malls	NNS
man	NN
manage	VB
managed	VBD
manager	NN
managers	NNS
managing	VBG
mango	NN
mangoes	NNS
manner	NN
manners	NNS
manual	JJ
many	OTHER
marathon	NN
marathons	NNS
march	NNP
margin	NN
margins	NNS
mark	NN
market	NN
markets	NNS
marks	NNS
married	VBD
marry	VB
marrying	VBG
marvelous	JJ
mary	NNP
mask	NN
masks	NNS
mass	NN
massive	JJ
match	NN
matches	NNS
material	NN
materials	NNS
math	NN
matter	NN
mattered	VBD
mattering	VBG
matters	NNS
mattress	NN
mattresses	NNS
may	OTHER
maybe	RB
mayor	NN
mayors	NNS
me	OTHER
meal	NN
meals	NNS
mean	JJ
meaner	JJR
meanest	JJS
means	NN
meanses	NNS
meanwhile	RB
measure	NN
measured	VBD
measures	NNS
measuring	VBG
meat	NN
medicine	NN
medicines	NNS
mediocre	JJ
meet	VB
meeting	NN
meetings	NNS
melodies	NNS
melody	NN
melon	NN
melons	NNS
melt	VB
melted	VBD
melting	VBG
member	NN
members	NNS
memories	NNS
memory	NN
men	NNS
mention	NN
mentioned	VBD
mentioning	VBG
mentions	NNS
merchant	NN
merchants	NNS
mercies	NNS
mercy	NN
merrier	JJR
merriest	JJS
merry	JJ
message	NN
messages	NNS
messier	JJR
messiest	JJS
messy	JJ
met	VBD
metal	NN
metallic	JJ
metals	NNS
method	NN
methods	NNS
mexico	NNP
miami	NNP
mice	NNS
michael	NNP
microsoft	NNP
middle	NN
middles	NNS
midnight	NN
midnights	NNS
might	OTHER
mild	JJ
milder	JJR
mildest	JJS
mildly	RB
milk	NN
million	OTHER
mind	NN
minded	VBD
minding	VBG
minds	NNS
mine	OTHER
miniature	JJ
minister	NN
ministers	NNS
minor	JJ
minute	NN
minutes	NNS
miracle	NN
miracles	NNS
mirror	NN
mirrors	NNS
miserable	JJ
miseries	NNS
misery	NN
miss	VB
missed	VBD
missing	VBG
mist	NN
mistake	NN
mistakes	NNS
misty	JJ
mix	VB
mixed	VBD
mixing	VBG
mixture	NN
mixtures	NNS
model	NN
models	NNS
modern	JJ
modernly	RB
modest	JJ
moist	JJ
moisture	NN
moment	NN
moments	NNS
monarchies	NNS
monarchy	NN
monday	NNP
money	NN
monkey	NN
monkeys	NNS
monochrome	JJ
month	NN
months	NNS
moodier	JJR
moodiest	JJS
moody	JJ
moon	NN
moons	NNS
moose	NN
mooses	NNS
moral	JJ
morally	RB
more	JJR
moreover	RB
morning	NN
mornings	NNS
morocco	NNP
moscow	NNP
mosque	NN
mosques	NNS
mosquito	NN
mosquitoes	NNS
most	JJS
mostly	RB
motel	NN
motels	NNS
moth	NN
mother	NN
mothers	NNS
moths	NNS
motor	NN
motors	NNS
mountain	NN
mountains	NNS
mourn	VB
mourned	VBD
mourning	VBG
mouse	NN
mouth	NN
mouths	NNS
move	VB
moved	VBD
movie	NN
movies	NNS
moving	VBG
much	OTHER
mud	NN
muds	NNS
murder	NN
murders	NNS
muscle	NN
muscles	NNS
museum	NN
museums	NNS
mushroom	NN
mushrooms	NNS
music	NN
must	OTHER
mute	JJ
my	OTHER
myself	OTHER
mysteries	NNS
mysterious	JJ
mystery	NN
nail	NN
nails	NNS
naked	JJ
narrow	JJ
narrowly	RB
nastier	JJR
nastiest	JJS
nasty	JJ
nation	NN
national	JJ
nationally	RB
nations	NNS
native	NN
natives	NNS
natural	JJ
nearly	RB
neat	JJ
neater	JJR
neatest	JJS
neck	NN
necklace	NN
necklaces	NNS
necks	NNS
need	OTHER
needed	VBD
needing	VBG
needle	NN
needles	NNS
negative	JJ
neighbor	NN
neighborhood	NN
neighborhoods	NNS
neighbors	NNS
neither	OTHER
nerve	NN
nerves	NNS
nervous	JJ
net	JJ
netflix	NNP
nets	NNS
network	NN
networks	NNS
neutral	JJ
never	RB
nevertheless	RB
new	JJ
newer	JJR
newest	JJS
newly	RB
news	NN
newspaper	NN
newspapers	NNS
next	OTHER
nice	JJ
nicely	RB
nicer	JJR
nicest	JJS
nigeria	NNP
night	NN
nightmare	NN
nightmares	NNS
nights	NNS
nine	OTHER
nixon	NNP
no	OTHER
noble	JJ
nod	VB
nodded	VBD
nodding	VBG
noise	NN
noises	NNS
none	OTHER
nonetheless	RB
nonsense	NN
nonsenses	NNS
noodle	NN
noodles	NNS
noon	NN
noons	NNS
nor	OTHER
norm	NN
normal	JJ
normally	RB
norms	NNS
nose	NN
noses	NNS
not	RB
note	NN
notebook	NN
notebooks	NNS
notes	NNS
notice	NN
noticed	VBD
notices	NNS
noticing	VBG
notification	NN
notifications	NNS
novel	NN
novels	NNS
november	NNP
now	RB
nowhere	RB
numb	JJ
number	NN
numbers	NNS
nurse	NN
nurses	NNS
nut	NN
nuts	NNS
obama	NNP
obey	VB
obeyed	VBD
obeying	VBG
object	NN
objects	NNS
observe	VB
observed	VBD
observing	VBG
obtain	VB
obtained	VBD
obtaining	VBG
obvious	JJ
obviously	RB
occupation	NN
occupations	NNS
occupied	JJ
occur	VB
occurred	VBD
occurring	VBG
ocean	NN
oceans	NNS
october	NNP
octopus	NN
octopuses	NNS
odd	JJ
odder	JJR
oddest	JJS
oddly	RB
of	OTHER
off	OTHER
offer	NN
offerred	VBD
offerring	VBG
offers	NNS
office	NN
officer	NN
officers	NNS
offices	NNS
official	JJ
often	RB
oh	OTHER
oil	NN
ok	OTHER
okay	OTHER
old	JJ
older	JJR
oldest	JJS
oldly	RB
olympics	NNPS
omg	OTHER
on	OTHER
once	RB
one	OTHER
onion	NN
onions	NNS
onto	OTHER
open	JJ
openly	RB
openned	VBD
openning	VBG
opera	NN
operas	NNS
opportunities	NNS
opportunity	NN
optimistic	JJ
option	NN
options	NNS
or	OTHER
orange	JJ
oranges	NNS
orchestra	NN
orchestras	NNS
order	NN
orderred	VBD
orderring	VBG
orders	NNS
ordinary	JJ
organic	JJ
organization	NN
organizations	NNS
organize	VB
organized	VBD
organizing	VBG
origin	NN
original	NN
originals	NNS
origins	NNS
other	OTHER
ought	OTHER
our	OTHER
ours	OTHER
ourselves	OTHER
out	OTHER
outline	NN
outlines	NNS
outside	OTHER
outstanding	JJ
oven	NN
ovens	NNS
over	OTHER
owe	VB
owed	VBD
owing	VBG
owl	NN
owls	NNS
own	OTHER
owned	VBD
owner	NN
owners	NNS
owning	VBG
pace	NN
paces	NNS
pack	VB
package	NN
packages	NNS
packed	VBD
packing	VBG
page	NN
pages	NNS
paid	VBD
pain	NN
pains	NNS
paint	VB
painted	VBD
painting	NN
paintings	NNS
pair	NN
pairs	NNS
pakistan	NNP
palace	NN
palaces	NNS
pale	JJ
paler	JJR
palest	JJS
pan	NN
pans	NNS
pants	NN
pantses	NNS
paper	NN
paragraph	NN
paragraphs	NNS
parcel	NN
parcels	NNS
parent	NN
parents	NNS
paris	NNP
park	NN
parks	NNS
parliament	NN
parliaments	NNS
parrot	NN
parrots	NNS
part	NN
partial	JJ
particular	JJ
particularly	RB
parties	NNS
partly	RB
partner	NN
partners	NNS
parts	NNS
party	NN
pass	VB
passed	VBD
passing	VBG
passive	JJ
passport	NN
passports	NNS
password	NN
passwords	NNS
past	JJ
pasta	NN
paste	VB
pasted	VBD
pasting	VBG
pastly	RB
path	NN
pathetic	JJ
paths	NNS
patient	JJ
patients	NNS
patricia	NNP
pattern	NN
patterns	NNS
pause	VB
paused	VBD
pausing	VBG
pay	VB
paying	VBG
pea	NN
peace	NN
peaceful	JJ
peach	NN
peaches	NNS
pear	NN
pears	NNS
peas	NNS
penalties	NNS
penalty	NN
penguin	NN
penguins	NNS
people	NNS
pepper	NN
per	OTHER
percent	NN
percents	NNS
perfect	JJ
perfectly	RB
perform	VB
performed	VBD
performing	VBG
perhaps	RB
permanent	JJ
permit	NN
permited	VBD
permiting	VBG
permits	NNS
person	NN
persons	NNS
persuade	VB
persuaded	VBD
persuading	VBG
pessimistic	JJ
pharmacies	NNS
pharmacy	NN
phase	NN
phases	NNS
phone	NN
phones	NNS
photo	NN
photoes	NNS
physics	NN
piano	NN
pianoes	NNS
pick	VB
picked	VBD
picking	VBG
picture	NN
pictures	NNS
pie	NN
piece	NN
pieces	NNS
pies	NNS
pig	NN
pigeon	NN
pigeons	NNS
pigs	NNS
pill	NN
pillow	NN
pillows	NNS
pills	NNS
pilot	NN
pilots	NNS
pineapple	NN
pineapples	NNS
pink	JJ
pities	NNS
pity	NN
pizza	NN
pizzas	NNS
plain	JJ
plainly	RB
plan	NN
planet	NN
planets	NNS
planned	VBD
planning	VBG
plans	NNS
plant	NN
planted	VBD
planting	VBG
plants	NNS
plastic	JJ
plate	NN
plates	NNS
play	VB
played	VBD
player	NN
players	NNS
playing	VBG
pleasant	JJ
pleasantly	RB
please	OTHER
pleasure	NN
pleasures	NNS
plentiful	JJ
plot	NN
plots	NNS
plum	NN
plums	NNS
pocket	NN
pockets	NNS
poem	NN
poems	NNS
poet	NN
poets	NNS
point	NN
pointed	VBD
pointing	VBG
points	NNS
poisonous	JJ
police	NN
policies	NNS
policy	NN
polite	JJ
politely	RB
political	JJ
politically	RB
politics	NN
pool	NN
pools	NNS
poor	JJ
poorer	JJR
poorest	JJS
poorly	RB
popular	JJ
popularly	RB
pork	NN
port	NN
portable	JJ
portion	NN
portions	NNS
ports	NNS
portugal	NNP
position	NN
positions	NNS
positive	JJ
possible	JJ
possibly	RB
post	NN
posts	NNS
pot	NN
potato	NN
potatoes	NNS
pots	NNS
pour	VB
poured	VBD
pouring	VBG
poverty	NN
power	NN
practice	VB
practiced	VBD
practicing	VBG
praise	VB
praised	VBD
praising	VBG
pray	VB
prayed	VBD
praying	VBG
precious	JJ
prefer	VB
prefered	VBD
prefering	VBG
prepare	VB
prepared	VBD
preparing	VBG
present	JJ
presentation	NN
presentations	NNS
presently	RB
presents	NNS
president	NN
presidents	NNS
press	VB
pressed	VBD
pressing	VBG
pressure	NN
pressures	NNS
pretend	VB
pretended	VBD
pretending	VBG
prettier	JJR
prettiest	JJS
prettily	RB
pretty	JJ
prevent	VB
prevented	VBD
preventing	VBG
price	NN
priceless	JJ
prices	NNS
pride	NN
primary	JJ
prince	NN
princes	NNS
princess	NN
princesses	NNS
principal	JJ
print	VB
printed	VBD
printer	NN
printers	NNS
printing	VBG
prison	NN
prisons	NNS
private	JJ
privately	RB
prize	NN
prizes	NNS
probably	RB
problem	NN
problems	NNS
process	NN
processes	NNS
produce	VB
produced	VBD
producer	NN
producers	NNS
producing	VBG
product	NN
productive	JJ
products	NNS
profession	NN
professions	NNS
professor	NN
professors	NNS
profile	NN
profiles	NNS
profit	NN
profits	NNS
progress	NN
project	NN
projects	NNS
promise	VB
promised	VBD
promising	VBG
promotion	NN
promotions	NNS
proof	NN
protect	VB
protected	VBD
protecting	VBG
protection	NN
proud	JJ
prouder	JJR
proudest	JJS
proudly	RB
prove	VB
proved	VBD
provide	VB
provided	VBD
providing	VBG
proving	VBG
public	JJ
publically	RB
pull	VB
pulled	VBD
pulling	VBG
pumpkin	NN
pumpkins	NNS
punish	VB
punished	VBD
punishing	VBG
punishment	NN
punishments	NNS
pure	JJ
purely	RB
purple	JJ
purpose	NN
purposes	NNS
purse	NN
purses	NNS
push	VB
pushed	VBD
pushing	VBG
put	VB
putting	VBG
qualities	NNS
quality	NN
quantities	NNS
quantity	NN
quarrel	NN
quarrels	NNS
quarter	NN
quarters	NNS
queen	NN
queens	NNS
question	NN
questions	NNS
quick	JJ
quicker	JJR
quickest	JJS
quickly	RB
quiet	JJ
quieter	JJR
quietest	JJS
quietly	RB
quit	VB
quite	RB
quiting	VBG
quiz	NN
quizes	NNS
rabbit	NN
rabbits	NNS
race	NN
races	NNS
racket	NN
rackets	NNS
radio	NN
radios	NNS
rain	NN
rainier	JJR
rainiest	JJS
rainy	JJ
raise	VB
raised	VBD
raising	VBG
ran	VBD
range	NN
ranges	NNS
rank	NN
ranks	NNS
rare	JJ
rarely	RB
rat	NN
rate	NN
rates	NNS
rather	RB
rats	NNS
raven	NN
ravens	NNS
raw	JJ
razor	NN
razors	NNS
reach	VB
reached	VBD
reaching	VBG
read	VB
readily	RB
reading	VBG
ready	JJ
reagan	NNP
real	JJ
realize	VB
realized	VBD
realizing	VBG
really	RB
rear	NN
rears	NNS
reason	NN
reasons	NNS
receipt	NN
receipts	NNS
receive	VB
received	VBD
receiving	VBG
recent	JJ
recently	RB
recognize	VB
recognized	VBD
recognizing	VBG
recommend	VB
recommended	VBD
recommending	VBG
record	NN
records	NNS
recoveries	NNS
recovery	NN
red	JJ
reduce	VB
reduced	VBD
reducing	VBG
reduction	NN
reductions	NNS
referee	NN
referees	NNS
refugee	NN
refugees	NNS
refuse	VB
refused	VBD
refusing	VBG
region	NN
regions	NNS
regret	NN
regreted	VBD
regreting	VBG
regrets	NNS
regulation	NN
regulations	NNS
relation	NN
relations	NNS
relationship	NN
relationships	NNS
relative	JJ
relax	VB
relaxed	VBD
relaxing	VBG
release	VB
released	VBD
releasing	VBG
relief	NN
reliefs	NNS
religion	NN
religions	NNS
reluctant	JJ
remain	VB
remained	VBD
remaining	VBG
remarkable	JJ
remember	VB
remembered	VBD
remembering	VBG
remind	VB
reminded	VBD
reminding	VBG
remove	VB
removed	VBD
removing	VBG
rent	VB
rented	VBD
renting	VBG
repair	VB
repaired	VBD
repairing	VBG
repeat	VB
repeated	VBD
repeating	VBG
replace	VB
replaced	VBD
replacing	VBG
replied	VBD
replies	NNS
reply	NN
replying	VBG
report	NN
reported	VBD
reporting	VBG
reports	NNS
republic	NN
republics	NNS
reputation	NN
reputations	NNS
request	NN
requested	VBD
requesting	VBG
requests	NNS
require	VB
required	VBD
requiring	VBG
rescue	VB
rescued	VBD
rescuing	VBG
resident	NN
residents	NNS
respect	NN
respected	VBD
respecting	VBG
respects	NNS
responsible	JJ
responsibly	RB
rest	VB
restaurant	NN
restaurants	NNS
rested	VBD
resting	VBG
restless	JJ
result	NN
results	NNS
return	VB
returned	VBD
returning	VBG
reward	NN
rewards	NNS
rhythm	NN
rhythms	NNS
rice	NN
rich	JJ
richard	NNP
richer	JJR
richest	JJS
richly	RB
ridden	VBN
ride	VB
riding	VBG
right	JJ
rightful	JJ
rightly	RB
ring	NN
ringed	VBD
ringing	VBG
rings	NNS
ripe	JJ
riper	JJR
ripest	JJS
rise	NN
risen	VBN
rises	NNS
rising	VBG
risk	NN
risks	NNS
river	NN
rivers	NNS
road	NN
roads	NNS
robberies	NNS
robbery	NN
robert	NNP
robust	JJ
rock	NN
rocks	NNS
rode	VBD
roll	VB
rolled	VBD
rolling	VBG
romantic	JJ
rome	NNP
roof	NN
roofs	NNS
room	NN
rooms	NNS
roosevelt	NNP
root	NN
roots	NNS
rope	NN
ropes	NNS
rose	VBD
rotten	JJ
rough	JJ
rougher	JJR
roughest	JJS
roughly	RB
round	JJ
rounder	JJR
roundest	JJS
roundly	RB
row	NN
rows	NNS
rub	VB
rubbed	VBD
rubber	NN
rubbing	VBG
rude	JJ
rudely	RB
ruder	JJR
rudest	JJS
rug	NN
rugs	NNS
rule	NN
rules	NNS
rumor	NN
rumors	NNS
run	VB
running	VBG
rush	VB
rushed	VBD
rushing	VBG
russia	NNP
sad	JJ
sadder	JJR
saddest	JJS
sadly	RB
sadness	NN
safe	JJ
safely	RB
safer	JJR
safest	JJS
safety	NN
said	VBD
sailor	NN
sailors	NNS
salad	NN
salads	NNS
salaries	NNS
salary	NN
salmon	NN
salmons	NNS
salt	NN
saltier	JJR
saltiest	JJS
salty	JJ
sample	NN
samples	NNS
sand	NN
sandal	NN
sandals	NNS
sandwich	NN
sandwiches	NNS
sane	JJ
sanely	RB
sang	VBD
sank	VBD
sarah	NNP
sat	VBD
satisfaction	NN
satisfactions	NNS
saturday	NNP
sauce	NN
sauces	NNS
save	VB
saved	VBD
saving	VBG
saw	VBD
say	VB
saying	VBG
scale	NN
scales	NNS
scandal	NN
scandals	NNS
scarce	JJ
scare	VB
scared	VBD
scarf	NN
scarfs	NNS
scaring	VBG
scary	JJ
scene	NN
sceneries	NNS
scenery	NN
scenes	NNS
schedule	NN
schedules	NNS
school	NN
schools	NNS
science	NN
scientist	NN
scientists	NNS
scissors	NN
scissorses	NNS
score	NN
scores	NNS
scotland	NNP
scream	VB
screamed	VBD
screaming	VBG
screen	NN
screens	NNS
screw	NN
screws	NNS
sculpture	NN
sculptures	NNS
sea	NN
search	VB
searched	VBD
searching	VBG
seas	NNS
seattle	NNP
second	OTHER
secondary	JJ
seconds	NNS
secret	NN
secrets	NNS
section	NN
sections	NNS
security	NN
see	VB
seed	NN
seeds	NNS
seeing	VBG
seek	VB
seeking	VBG
seem	VB
seemed	VBD
seeming	VBG
seen	VBN
segment	NN
segments	NNS
seldom	RB
selfish	JJ
selfless	JJ
sell	VB
selling	VBG
senate	NN
senates	NNS
send	VB
sending	VBG
sense	NN
senses	NNS
sent	VBD
sentence	NN
sentences	NNS
seoul	NNP
september	NNP
serious	JJ
seriously	RB
serve	VB
served	VBD
service	NN
services	NNS
serving	VBG
set	NN
sets	NNS
setting	NN
settings	NNS
settle	VB
settled	VBD
settling	VBG
seven	OTHER
severe	JJ
severely	RB
shake	VB
shaken	VBN
shaking	VBG
shall	OTHER
shallow	JJ
shallowly	RB
shame	NN
shape	NN
shapes	NNS
share	NN
shared	VBD
shares	NNS
sharing	VBG
shark	NN
sharks	NNS
sharp	JJ
sharper	JJR
sharpest	JJS
sharply	RB
she	OTHER
sheep	NN
sheeps	NNS
sheet	NN
sheets	NNS
shier	JJR
shiest	JJS
shine	VB
shining	VBG
shirt	NN
shirts	NNS
shocked	JJ
shockedly	RB
shocking	JJ
shockingly	RB
shoe	NN
shoes	NNS
shone	VBD
shook	VBD
shoot	VB
shooting	VBG
shop	NN
shops	NNS
shore	NN
shores	NNS
short	JJ
shorter	JJR
shortest	JJS
shortly	RB
shorts	NN
shortses	NNS
shot	VBD
should	OTHER
shoulder	NN
shoulders	NNS
shout	NN
shouted	VBD
shouting	VBG
shouts	NNS
show	NN
showed	VBD
showing	VBG
shows	NNS
shrimp	NN
shrimps	NNS
shut	VB
shutting	VBG
shy	JJ
sick	JJ
sicker	JJR
sickest	JJS
sickly	RB
side	NN
sides	NNS
sigh	VB
sighed	VBD
sighing	VBG
sight	NN
sights	NNS
sign	NN
signal	NN
signaled	VBD
signaling	VBG
signals	NNS
signs	NNS
silence	NN
silences	NNS
silk	NN
sillier	JJR
silliest	JJS
silly	JJ
silver	JJ
similar	JJ
similarities	NNS
similarity	NN
similarly	RB
simple	JJ
simply	RB
since	OTHER
sing	VB
singer	NN
singers	NNS
singing	VBG
single	JJ
sink	NN
sinking	VBG
sinks	NNS
sister	NN
sisters	NNS
sit	VB
site	NN
sites	NNS
sitting	VBG
situation	NN
situations	NNS
six	OTHER
size	NN
sizes	NNS
sketch	NN
sketches	NNS
ski	VB
skied	VBD
skies	NNS
skiing	VBG
skill	NN
skills	NNS
skin	NN
skip	VB
skipped	VBD
skipping	VBG
skirt	NN
skirts	NNS
sky	NN
sleep	NN
sleeping	VBG
slept	VBD
slid	VBD
slide	VB
sliding	VBG
slight	JJ
slightly	RB
slip	VB
slipped	VBD
slipper	NN
slippers	NNS
slipping	VBG
slow	JJ
slower	JJR
slowest	JJS
slowly	RB
small	JJ
smaller	JJR
smallest	JJS
smallly	RB
smart	JJ
smarter	JJR
smartest	JJS
smartly	RB
smash	VB
smashed	VBD
smashing	VBG
smell	VB
smelled	VBD
smelling	VBG
smile	NN
smiled	VBD
smiles	NNS
smiley	NN
smileys	NNS
smiling	VBG
smoke	NN
smokes	NNS
smooth	JJ
smoother	JJR
smoothest	JJS
smoothly	RB
snack	NN
snacks	NNS
snail	NN
snails	NNS
snake	NN
snakes	NNS
sneeze	VB
sneezed	VBD
sneezing	VBG
snow	NN
snowy	JJ
so	RB
soap	NN
soaps	NNS
social	JJ
socially	RB
societies	NNS
society	NN
sock	NN
socks	NNS
soda	NN
sofa	NN
sofas	NNS
soft	JJ
softer	JJR
softest	JJS
softly	RB
soil	NN
soils	NNS
sold	VBD
soldier	NN
soldiers	NNS
solid	JJ
solidly	RB
solution	NN
solutions	NNS
solve	VB
solved	VBD
solving	VBG
some	OTHER
sometime	RB
sometimes	RB
somewhat	RB
somewhere	RB
son	NN
song	NN
songs	NNS
sons	NNS
soon	RB
sooner	RBR
soonest	RBS
sorrily	RB
sorrow	NN
sorrows	NNS
sorry	JJ
sort	NN
sorted	VBD
sorting	VBG
sorts	NNS
sought	VBD
soul	NN
souls	NNS
sound	NN
sounded	VBD
sounding	VBG
sounds	NNS
soup	NN
soups	NNS
sour	JJ
source	NN
sources	NNS
sourly	RB
space	NN
spaces	NNS
spain	NNP
spare	JJ
sparrow	NN
sparrows	NNS
sparse	JJ
speak	VB
speaker	NN
speakers	NNS
speaking	VBG
special	JJ
specially	RB
species	NN
specieses	NNS
speech	NN
speeches	NNS
speed	NN
speeds	NNS
spell	VB
spelling	VBG
spelt	VBD
spend	VB
spending	VBG
spent	VBD
sphere	NN
spheres	NNS
spice	NN
spices	NNS
spicy	JJ
spider	NN
spiders	NNS
spill	VB
spilling	VBG
spilt	VBD
spin	VB
spinach	NN
spinaches	NNS
spinning	VBG
spirit	NN
spirits	NNS
splendid	JJ
split	VB
splitting	VBG
spoke	VBD
spoken	VBN
spooky	JJ
spoon	NN
spoons	NNS
sport	NN
sports	NNS
spotify	NNP
spread	VB
spreading	VBG
spring	NN
springs	NNS
spun	VBD
square	JJ
squarely	RB
squares	NNS
squeeze	VB
squeezed	VBD
squeezing	VBG
squirrel	NN
squirrels	NNS
stable	JJ
stadium	NN
stadiums	NNS
stage	NN
stages	NNS
stair	NN
stairs	NNS
stale	JJ
stalely	RB
stamp	NN
stamps	NNS
stand	VB
standard	NN
standards	NNS
standing	VBG
star	NN
stare	VB
stared	VBD
staring	VBG
stars	NNS
start	VB
started	VBD
starting	VBG
starving	JJ
state	NN
states	NNS
station	NN
stations	NNS
status	NN
statuses	NNS
stay	VB
stayed	VBD
staying	VBG
steadier	JJR
steadiest	JJS
steady	JJ
steal	VB
stealing	VBG
steel	NN
stem	NN
stems	NNS
step	NN
stepped	VBD
stepping	VBG
steps	NNS
stew	NN
stews	NNS
stick	VB
sticking	VBG
still	RB
sting	VB
stinging	VBG
stir	VB
stirred	VBD
stirring	VBG
stole	VBD
stolen	VBN
stomach	NN
stomaches	NNS
stone	NN
stones	NNS
stood	VBD
stop	VB
stopped	VBD
stopping	VBG
store	NN
stores	NNS
stories	NNS
storm	NN
storms	NNS
stormy	JJ
story	NN
stove	NN
stoves	NNS
strange	JJ
strangely	RB
stranger	NN
strangers	NNS
strangest	JJS
street	NN
streets	NNS
strength	NN
strengths	NNS
stress	NN
stretch	VB
stretched	VBD
stretching	VBG
strict	JJ
strike	VB
striking	VBG
string	NN
strings	NNS
strong	JJ
stronger	JJR
strongest	JJS
strongly	RB
struck	VBD
structure	NN
structures	NNS
stuck	VBD
student	NN
students	NNS
studied	VBD
study	VB
studying	VBG
stuff	NN
stung	VBD
stunning	JJ
stupid	JJ
stupidly	RB
sturdier	JJR
sturdiest	JJS
sturdy	JJ
style	NN
styles	NNS
subject	NN
subjects	NNS
substance	NN
substances	NNS
subtle	JJ
subtly	RB
succeed	VB
succeeded	VBD
succeeding	VBG
success	NN
successes	NNS
such	OTHER
sudden	JJ
suffer	VB
suffered	VBD
suffering	VBG
sufficient	JJ
sugar	NN
suggest	VB
suggested	VBD
suggesting	VBG
suitcase	NN
suitcases	NNS
sum	NN
summaries	NNS
summary	NN
sums	NNS
sun	NN
sunday	NNP
sung	VBN
sunk	VBN
sunnier	JJR
sunniest	JJS
sunny	JJ
suns	NNS
superb	JJ
superior	JJ
supermarket	NN
supermarkets	NNS
supper	NN
suppers	NNS
supplied	VBD
supplies	NNS
supply	NN
supplying	VBG
support	VB
supported	VBD
supporting	VBG
suppose	VB
supposed	VBD
supposing	VBG
supreme	JJ
sure	JJ
surely	RB
surer	JJR
surest	JJS
surface	NN
surfaces	NNS
surgeries	NNS
surgery	NN
surprise	NN
surprised	JJ
surprisedly	RB
surprises	NNS
surprising	JJ
surprisingly	RB
surround	VB
surrounded	VBD
surrounding	VBG
surroundings	NN
surroundingses	NNS
survive	VB
survived	VBD
surviving	VBG
susan	NNP
swam	VBD
swan	NN
swans	NNS
swear	VB
swearing	VBG
sweater	NN
sweaters	NNS
sweep	VB
sweeping	VBG
sweet	JJ
sweeter	JJR
sweetest	JJS
sweetly	RB
swept	VBD
swim	VB
swimming	VBG
swing	VB
swinging	VBG
switch	NN
switched	VBD
switches	NNS
switching	VBG
swore	VBD
sworn	VBN
swum	VBN
swung	VBD
sydney	NNP
symbol	NN
symbols	NNS
sympathies	NNS
sympathy	NN
synagogue	NN
synagogues	NNS
synthetic	JJ
system	NN
systems	NNS
table	NN
tables	NNS
tablet	NN
tablets	NNS
tailor	NN
tailors	NNS
take	VB
taken	VBN
taking	VBG
tale	NN
talent	NN
talents	NNS
tales	NNS
talk	VB
talked	VBD
talking	VBG
tall	JJ
taller	JJR
tallest	JJS
tallly	RB
tame	JJ
tamely	RB
tan	JJ
task	NN
tasks	NNS
taste	VB
tasted	VBD
tastier	JJR
tastiest	JJS
tasting	VBG
tasty	JJ
taught	VBD
tax	NN
taxes	NNS
tea	NN
teach	VB
teacher	NN
teachers	NNS
teaching	VBG
team	NN
teams	NNS
tear	NN
teared	VBD
tearing	VBG
tears	NNS
teenager	NN
teenagers	NNS
teeth	NNS
telephone	NN
telephones	NNS
television	NN
televisions	NNS
tell	VB
telling	VBG
temperature	NN
temperatures	NNS
temple	NN
temples	NNS
temporary	JJ
ten	OTHER
tenant	NN
tenants	NNS
tent	NN
tents	NNS
terrible	JJ
terrific	JJ
terrifying	JJ
territories	NNS
territory	NN
test	NN
testimonies	NNS
testimony	NN
tests	NNS
textbook	NN
textbooks	NNS
thank	OTHER
thanked	VBD
thankful	JJ
thanking	VBG
thanks	OTHER
that	OTHER
the	OTHER
theater	NN
theaters	NNS
theft	NN
thefts	NNS
their	OTHER
theirs	OTHER
them	OTHER
theme	NN
themes	NNS
themselves	OTHER
then	RB
theories	NNS
theory	NN
therapies	NNS
therapy	NN
there	OTHER
these	OTHER
they	OTHER
thick	JJ
thicker	JJR
thickest	JJS
thickly	RB
thin	JJ
thing	NN
things	NNS
think	VB
thinking	VBG
thinly	RB
thinner	JJR
thinnest	JJS
third	OTHER
thirst	NN
thirstier	JJR
thirstiest	JJS
thirsty	JJ
thirty	OTHER
this	OTHER
thomas	NNP
those	OTHER
though	OTHER
thought	NN
thoughts	NNS
thousand	OTHER
thread	NN
threads	NNS
threat	NN
threats	NNS
three	OTHER
threw	VBD
thrice	RB
thrifty	JJ
through	OTHER
throw	VB
throwing	VBG
thrown	VBN
thumb	NN
thumbs	NNS
thunder	NN
thursday	NNP
ticket	NN
tickets	NNS
tidier	JJR
tidiest	JJS
tidy	JJ
tie	NN
tied	VBD
ties	NNS
tiger	NN
tigers	NNS
tight	JJ
tighter	JJR
tightest	JJS
tightly	RB
time	NN
timeline	NN
timelines	NNS
times	NNS
timid	JJ
tinier	JJR
tiniest	JJS
tinily	RB
tiny	JJ
tire	NN
tired	JJ
tiredder	JJR
tireddest	JJS
tiredly	RB
tires	NNS
title	NN
titles	NNS
to	OTHER
toad	NN
toads	NNS
today	RB
todays	NNS
toe	NN
toes	NNS
together	RB
tokyo	NNP
told	VBD
tolerant	JJ
tomato	NN
tomatoes	NNS
tomorrow	RB
tongue	NN
tongues	NNS
tonight	RB
too	RB
took	VBD
tool	NN
tools	NNS
tooth	NN
top	NN
topic	NN
topics	NNS
tops	NNS
tornado	NN
tornadoes	NNS
toronto	NNP
total	JJ
totally	RB
totals	NNS
touch	VB
touched	VBD
touching	VBG
tough	JJ
toughly	RB
tour	NN
tourist	NN
tourists	NNS
tournament	NN
tournaments	NNS
tours	NNS
toward	OTHER
towards	OTHER
towel	NN
towels	NNS
tower	NN
towers	NNS
town	NN
towns	NNS
toxic	JJ
trace	NN
traces	NNS
track	NN
tracks	NNS
trade	NN
trader	NN
traders	NNS
tradition	NN
traditions	NNS
tragedies	NNS
tragedy	NN
trail	NN
trails	NNS
train	VB
trained	VBD
training	VBG
travel	VB
traveled	VBD
traveler	NN
travelers	NNS
traveling	VBG
treat	VB
treated	VBD
treating	VBG
treatment	NN
treatments	NNS
tree	NN
trees	NNS
tremble	VB
trembled	VBD
trembling	VBG
triangle	NN
triangles	NNS
tried	VBD
trip	NN
triple	JJ
trips	NNS
trivial	JJ
trivially	RB
true	JJ
truely	RB
truly	RB
trumpet	NN
trumpets	NNS
trust	NN
trusted	VBD
trusting	VBG
trusts	NNS
truth	NN
truths	NNS
try	VB
trying	VBG
tsunami	NN
tsunamis	NNS
tuesday	NNP
tuna	NN
tunas	NNS
tune	NN
tunes	NNS
tunisia	NNP
tunnel	NN
tunnels	NNS
turkey	NN
turkeys	NNS
turn	VB
turned	VBD
turning	VBG
turtle	NN
turtles	NNS
tweet	NN
tweets	NNS
twelve	OTHER
twenty	OTHER
twice	RB
twitter	NNP
two	OTHER
tying	VBG
type	NN
typed	VBD
types	NNS
typical	JJ
typing	VBG
uglier	JJR
ugliest	JJS
ugly	JJ
ultimate	JJ
umbrella	NN
umbrellas	NNS
unable	JJ
unably	RB
unaware	JJ
unawarely	RB
uncle	NN
uncles	NNS
uncomfortable	JJ
uncomfortably	RB
under	OTHER
understand	VB
understanding	VBG
understood	VBD
unequal	JJ
unequally	RB
unexpected	JJ
unforeseeable	JJ
ungrateful	JJ
union	NN
unions	NNS
unique	JJ
uniquely	RB
unit	NN
units	NNS
universe	NN
universes	NNS
universities	NNS
university	NN
unknown	JJ
unknownly	RB
unless	OTHER
unlikely	JJ
unofficial	JJ
unpleasant	JJ
unpleasantly	RB
unpopular	JJ
unpopularly	RB
unpredictable	JJ
unstable	JJ
unsteady	JJ
unsure	JJ
unsurely	RB
until	OTHER
unusual	JJ
up	OTHER
update	NN
updates	NNS
upon	OTHER
upset	VB
upsetted	VBD
upsetting	VBG
us	OTHER
use	VB
used	VBD
useful	JJ
usefully	RB
useless	JJ
uselessly	RB
username	NN
usernames	NNS
using	VBG
usually	RB
utterly	RB
vacant	JJ
vacation	NN
vacations	NNS
vaccine	NN
vaccines	NNS
valley	NN
valleys	NNS
valuable	JJ
value	NN
values	NNS
vanish	VB
vanished	VBD
vanishing	VBG
variable	JJ
varieties	NNS
variety	NN
vast	JJ
vastly	RB
vegetable	NN
vegetables	NNS
verdict	NN
verdicts	NNS
version	NN
versions	NNS
very	RB
via	OTHER
vicious	JJ
victories	NNS
victory	NN
view	NN
views	NNS
village	NN
villages	NNS
villain	NN
villains	NNS
vintage	JJ
violence	NN
violent	JJ
violin	NN
violins	NNS
visa	NN
visas	NNS
visible	JJ
visibly	RB
visit	VB
visitor	NN
visitors	NNS
visitted	VBD
visitting	VBG
vivid	JJ
voice	NN
voices	NNS
volcano	NN
volcanoes	NNS
volume	NN
vote	NN
voted	VBD
voter	NN
voters	NNS
votes	NNS
voting	VBG
voyage	NN
voyages	NNS
wage	NN
wages	NNS
waist	NN
waists	NNS
wait	VB
waited	VBD
waiter	NN
waiters	NNS
waiting	VBG
wake	VB
waking	VBG
wales	NNP
walk	VB
walked	VBD
walking	VBG
wall	NN
wallet	NN
wallets	NNS
walls	NNS
walnut	NN
walnuts	NNS
wander	VB
wandered	VBD
wandering	VBG
want	VB
wanted	VBD
wanting	VBG
war	NN
warehouse	NN
warehouses	NNS
warm	JJ
warmer	JJR
warmest	JJS
warmly	RB
warmth	NN
warn	VB
warned	VBD
warning	VBG
wars	NNS
was	OTHER
wash	VB
washed	VBD
washing	VBG
washington	NNP
wasp	NN
wasps	NNS
waste	VB
wasted	VBD
wasting	VBG
watch	NN
watched	VBD
watches	NNS
watching	VBG
water	NN
wave	VB
waved	VBD
waving	VBG
way	NN
ways	NNS
we	OTHER
weak	JJ
weaker	JJR
weakest	JJS
weakly	RB
weakness	NN
weaknesses	NNS
wealth	NN
wear	VB
wearing	VBG
weather	NN
web	NN
webs	NNS
website	NN
websites	NNS
wedding	NN
weddings	NNS
wednesday	NNP
week	NN
weeks	NNS
weep	VB
weeping	VBG
weigh	VB
weighed	VBD
weighing	VBG
weight	NN
weights	NNS
weird	JJ
weirder	JJR
weirdest	JJS
weirdly	RB
welcome	VB
welcomed	VBD
welcoming	VBG
well	RB
went	VBD
wept	VBD
were	OTHER
wet	JJ
wetly	RB
wetter	JJR
wettest	JJS
whale	NN
whales	NNS
what	OTHER
whatever	OTHER
wheel	NN
wheels	NNS
when	OTHER
where	OTHER
whether	OTHER
which	OTHER
whichever	OTHER
while	OTHER
whiskey	NN
whiskeys	NNS
whisper	NN
whispered	VBD
whispering	VBG
whispers	NNS
white	JJ
who	OTHER
whoever	OTHER
whole	JJ
wholely	RB
whom	OTHER
whose	OTHER
why	OTHER
wide	JJ
widely	RB
wider	JJR
widest	JJS
width	NN
widths	NNS
wife	NN
wild	JJ
wildly	RB
will	OTHER
william	NNP
willing	JJ
willingly	RB
win	VB
wind	NN
winded	VBD
windier	JJR
windiest	JJS
winding	VBG
window	NN
windows	NNS
winds	NNS
windy	JJ
wine	NN
wing	NN
wings	NNS
winning	VBG
wipe	VB
wiped	VBD
wiping	VBG
wire	NN
wires	NNS
wisdom	NN
wise	JJ
wisely	RB
wiser	JJR
wisest	JJS
wish	VB
wished	VBD
wishing	VBG
with	OTHER
within	OTHER
without	OTHER
witness	NN
witnesses	NNS
wives	NNS
woke	VBD
woken	VBN
wolf	NN
wolves	NNS
woman	NN
women	NNS
won	VBD
wonder	NN
wondered	VBD
wonderful	JJ
wondering	VBG
wonders	NNS
wood	NN
wooden	JJ
wool	NN
word	NN
words	NNS
wore	VBD
work	NN
worked	VBD
worker	NN
workers	NNS
working	VBG
world	NN
worlds	NNS
worm	NN
worms	NNS
worn	VBN
worried	VBD
worries	NNS
worry	NN
worrying	VBG
worse	JJR
worst	JJS
worthless	JJ
worthy	JJ
would	OTHER
wound	NN
wounds	NNS
wow	OTHER
wrap	VB
wrapped	VBD
wrapping	VBG
wrist	NN
wrists	NNS
write	VB
writer	NN
writers	NNS
writing	VBG
written	VBN
wrong	JJ
wrongly	RB
wrote	VBD
yard	NN
yards	NNS
year	NN
years	NNS
yell	VB
yelled	VBD
yelling	VBG
yellow	JJ
yes	OTHER
yesterday	RB
yet	OTHER
yogurt	NN
yogurts	NNS
you	OTHER
young	JJ
younger	JJR
youngest	JJS
youngly	RB
your	OTHER
yours	OTHER
yourself	OTHER
youtube	NNP
yummy	JJ
zebra	NN
zebras	NNS
zipper	NN
zippers	NNS
zone	NN
zones	NNS

# ordered fallback rules, applied when the word is not listed above
[suffix]
ness	NN
ment	NN
tion	NN
sion	NN
ship	NN
hood	NN
ance	NN
ence	NN
ity	NN
ful	JJ
less	JJ
ous	JJ
ive	JJ
able	JJ
ible	JJ
ish	JJ
ly	RB
est	JJS
er	JJR
ing	VBG
ed	VBD
s	NNS
)lex";

}  // namespace tweetsense

#endif  // TWEETSENSE_DEFAULT_TAGGER_LEXICON_HPP_
