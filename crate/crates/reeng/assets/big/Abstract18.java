public abstract class Abstract18 extends Abstract12 {
}
