public abstract class Abstract14 extends Abstract1 {
}
