# Ficheiro intencionalmente vazio.
# Transforma 'tests' num sub-pacote de 'aug_cohomology'.
