# Ficheiro intencionalmente vazio.
# Transforma 'harness' num sub-pacote de 'aug_cohomology'.
