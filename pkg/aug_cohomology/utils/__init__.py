# Ficheiro intencionalmente vazio.
# Transforma 'utils' num sub-pacote de 'aug_cohomology'.
